"""
Singular strata of weighted projective spaces and circle quotients
==================================================================

Weighted projective spaces CP^n(q) are smooth away from the coordinate
subspaces whose weights share a factor.  This demo lists the stratification
by singular dimension for a few spaces, shows how isotropy orders follow the
weight gcds, and contrasts the orientable picture (no codimension-1 stratum,
ever) with the reflection quotient of the circle, whose two endpoints form a
nonempty codimension-1 stratum.
"""

from orbidegree import (
    CircleQuotient,
    WpsOrbifold,
    isotropy,
    singular_dimension,
    strata,
)


def describe(space):
    print(f"\n{space}")
    report = strata(space)
    print(f"  codim1_empty={report.codim1_empty}  orientable={report.orientable}")
    for record in report.records:
        tag = " (open, dense)" if record.open_dense else ""
        print(f"  singular dimension {record.sdim}{tag}:")
        for comp in record.components:
            print(f"    isotropy Z_{comp.isotropy_order}: {comp.description}")


# ordinary projective line: a manifold, every point smooth
describe(WpsOrbifold((1, 1)))

# one Z_3 point at [0:1]
describe(WpsOrbifold((1, 3)))

# richer weights: strata collect the supports with a common weight factor
describe(WpsOrbifold((2, 3, 5)))
describe(WpsOrbifold((1, 2, 2)))

# the reflection quotient: an interval with two order-2 endpoints
describe(CircleQuotient.reflection())

# free rotations leave the quotient a smooth circle
describe(CircleQuotient.rotation(5))

# pointwise data matches the strata
space = WpsOrbifold((1, 2, 2))
for encoded in ("0/1,0/1,0/1", "0,0/1,0/1", "0,0,0/1"):
    point = space.point(*encoded.split(","))
    print(
        f"\npoint {point}: isotropy Z_{isotropy(point).order}, "
        f"singular dimension {singular_dimension(point)}"
    )
