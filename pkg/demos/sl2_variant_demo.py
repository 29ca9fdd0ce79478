"""
The variant part for SL2
========================
"""

from pwlab.ring import build_ring
from pwlab.sl2 import assemble_sl2_ring_skeleton, e_var, variant_consistency, variant_dims

for g in range(2, 6):
    print(g, e_var(g).xy_coefficients(), variant_dims(g).dims)

print(variant_consistency(3))

# genus 2: odd degree 5 picks up 30 extra classes
sk = assemble_sl2_ring_skeleton(2, build_ring(2, 2).dims())
print(sk.dims())
