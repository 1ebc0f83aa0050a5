"""
Slice lifts, phase corrections and Jacobian certificates
========================================================

On the sphere the coordinate-power map does not send the slice at x into the
slice at its image; a unique small rotation k(y) = e^{i*phi} fixes that.  The
phase solves a one-unknown orthogonality equation by Newton iteration.  This
demo shows the residuals, the linear decay of the phase with the perturbation
size, its invariance under the isotropy of the base point, and the Jacobian
certificates (orientation sign and smallest singular value) that flag regular
and irregular points.
"""

import math

import numpy as np

from orbidegree import (
    IrregularPointError,
    MonomialMap,
    WpsOrbifold,
    numeric_jacobian,
    slice_chart,
    slice_lift,
    sphere_point,
)

rng = np.random.default_rng(0)

# Newton residuals at a random base point
f = MonomialMap.from_projective((2, 3))
x = rng.normal(size=2) + 1j * rng.normal(size=2)
x /= np.linalg.norm(x)
chart = slice_chart(x, f.source.weights)
direction = rng.normal(size=chart.dimension)
direction /= np.linalg.norm(direction)

print("phase correction along shrinking perturbations:")
for h in (1e-2, 1e-3, 1e-4):
    lift = slice_lift(f, x, chart.point(h * direction))
    print(f"  |y-x| ~ {h:.0e}: phase {lift.phase:+.3e}, residual {abs(lift.residual):.1e}, "
          f"{lift.iterations} Newton steps")
print("  -> the phase shrinks linearly with the perturbation")

# the phase is invariant under the isotropy of the base point
g = MonomialMap.to_projective((1, 3))
vertex = sphere_point(WpsOrbifold((1, 3)).axis_point(1))
vertex_chart = slice_chart(vertex, g.source.weights)
gamma = np.exp(2j * math.pi / 3 * np.array(g.source.weights))
coeffs = 1e-3 * rng.normal(size=vertex_chart.dimension)
y = vertex_chart.point(coeffs)
print(f"\nisotropy invariance at the Z_3 vertex: "
      f"phase(y) = {slice_lift(g, vertex, y).phase:+.3e}, "
      f"phase(gamma.y) = {slice_lift(g, vertex, gamma * y).phase:+.3e}")

# Jacobian certificates separate regular from irregular points
f13 = MonomialMap.from_projective((1, 3))
smooth = sphere_point(f13.source.all_ones())
cert = numeric_jacobian(f13, smooth)
print(f"\ncubing map at a smooth preimage: sign {cert.sign:+d}, "
      f"smallest singular value {cert.smallest_singular_value:.4f}")

f115 = MonomialMap.from_projective((1, 1, 5))
try:
    numeric_jacobian(f115, sphere_point(f115.source.axis_point(0)))
except IrregularPointError as exc:
    print(f"power-5 map at a critical preimage: {exc}")
