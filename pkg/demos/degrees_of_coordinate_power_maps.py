"""
Exact degrees of coordinate-power maps
======================================

The coordinate-power map z_i -> z_i^{e_i} descends to CP^n(q) -> CP^n(r)
exactly when q_i * e_i = d * r_i for one integer d.  Its degree is the
weighted count of preimages of any regular value: each point contributes
|G_value| / |G_point|.  The three model families reproduce the closed
formulas prod(q), lcm(q)^n / prod(q), and their composition product, and the
library checks the enumerated fibres against the closed form (prod e_i) / d.
"""

import math

from orbidegree import (
    MonomialMap,
    degree,
    degree_closed_form,
    preimages,
    theta_at,
    weighted_cardinality,
)

print("maps onto a weighted space: degree = product of the weights")
for q in ((1, 3), (2, 3), (1, 2, 3), (3, 4, 5)):
    f = MonomialMap.from_projective(q)
    print(f"  {f}: degree {degree(f, include_preimages=False).oriented} = {math.prod(q)}")

print("\nmaps back to ordinary projective space: degree = lcm(q)^n / product(q)")
for q in ((1, 3), (2, 3), (1, 2, 3), (3, 4, 5)):
    g = MonomialMap.to_projective(q)
    n = len(q) - 1
    print(f"  {g}: degree {degree(g, include_preimages=False).oriented} "
          f"= {math.lcm(*q)}^{n} / {math.prod(q)}")

print("\ncompositions between two weighted spaces")
for q, r in (((1, 3), (1, 2)), ((2, 3), (1, 5)), ((1, 2, 3), (1, 1, 2))):
    h = MonomialMap.between(q, r)
    print(f"  q={q}, r={r}: degree {degree(h, include_preimages=False).oriented}, "
          f"closed form {degree_closed_form(h)}")

# a non-smooth value can still be regular: the whole count sits in one point
f = MonomialMap.from_projective((1, 1, 5))
vertex = f.target.axis_point(2)
records = preimages(f, vertex)
print(f"\nfibre of {f} over the Z_5 vertex {vertex}:")
for rec in records:
    print(f"  {rec.point}  isotropy Z_{rec.isotropy_order}  weight {rec.weight}")
print(f"  weighted count {weighted_cardinality(f, vertex)} equals the degree {math.prod((1, 1, 5))}")

# the isotropy homomorphism detects critical points: its kernel must vanish
g = MonomialMap.to_projective((1, 3))
hom = theta_at(g, g.source.axis_point(1))
print(f"\n{g} at the Z_3 vertex: kernel of the isotropy homomorphism has order "
      f"{hom.kernel_order} -> the vertex is a critical point")
