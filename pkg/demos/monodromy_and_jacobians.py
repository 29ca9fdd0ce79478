"""
Local monodromy invariants and compactified Jacobians
=====================================================

The two counts below are computed independently and should agree.
"""

from pwlab.braid import Partition, build_rep, invariant_dims_by_degree, total_local_invariants
from pwlab.jacobian import (compactified_jacobian_betti, format_polynomial, poincare_polynomial,
                            singular_type_from_orders)

g = 3
for parts in [(2,), (1, 1), (3, 1, 2), (2, 2, 2, 2)]:
    p = Partition(parts)
    rep = build_rep(p, "conn")
    per_degree = invariant_dims_by_degree(rep)
    t = singular_type_from_orders(g, p.parts)
    print(parts, "invariants by degree:", per_degree)
    print("   braid side:", total_local_invariants(g, p, "conn"),
          " Jacobian side:", compactified_jacobian_betti(t))

# a cusp on an elliptic normalization
t = singular_type_from_orders(1, (3, 1))
print(t, format_polynomial(poincare_polynomial(t)))
