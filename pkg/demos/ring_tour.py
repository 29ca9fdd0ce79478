"""
Building the ring and looking at its Lefschetz structure
=========================================================

Genus 2 with the canonical twist, then a pole case.
"""

from collections import Counter

from pwlab.lefschetz import BiGradedModule, hard_lefschetz_verify, isobaric_pieces
from pwlab.ring import build_ring

pres = build_ring(2, 2)
print("w0 =", pres.w0, " total dimension =", pres.total_dim())

# Betti numbers by cohomological degree
by_degree = Counter()
for (d, w), n in pres.dims().items():
    by_degree[d] += n
print("Betti numbers:", dict(sorted(by_degree.items())))

# a few products: beta survives, beta * psi_1 lands in degree 7 and dies
beta, psi1 = pres.beta(), pres.psi(1)
print("beta =", beta)
print("beta * psi_1 =", beta * psi1)
print("gamma =", pres.gamma())

# cup with alpha pairs weight w0 - l with w0 + l
module = BiGradedModule.from_ring(pres)
for row in hard_lefschetz_verify(module):
    print(row)

# the isobaric pieces Y^j P_w, keyed by (w, j)
print(isobaric_pieces(module))

# same thing with poles: weights are still symmetric about w0
pres = build_ring(3, 5)
weights = Counter()
for (d, w), n in pres.dims().items():
    weights[w] += n
print("g=3, deg D=5, dims by weight:", dict(sorted(weights.items())))
