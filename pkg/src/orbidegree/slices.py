"""Floating-point cross-validation of the exact engine via slice charts.

The sphere S^{2n+1} in C^{n+1} carries the weighted circle action
e^{i t} . z = (e^{i q_0 t} z_0, ..., e^{i q_n t} z_n) whose orbit direction at
z is i*(q_0 z_0, ..., q_n z_n).  A slice at z is the piece of the sphere
orthogonal to that direction; the coordinate-power map does not respect
slices, but a unique small rotation k(y) = e^{i phi} pushes the image back
into the target slice.  phi solves a one-real-unknown orthogonality equation
by Newton iteration (the acting group is a circle, so one parameter
suffices, and the correction is unique in the window |phi| < pi/|G_image|).

Finite differences of the corrected lift across orthonormal slice frames
give the Jacobian whose determinant sign and smallest singular value certify
orientation behaviour and regularity.  Frames are oriented so that
(base point, orbit rotation direction, frame) is positively oriented in the
ambient complex coordinates, which induces the complex orientation on the
quotient uniformly in the weights; holomorphic chart lifts then have sign +1.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .degree import DEFAULT_ENUMERATION_CAP, preimages
from .errors import IrregularPointError, NewtonDivergedError, PreconditionViolatedError
from .maps import MonomialMap
from .roots import ExactCoordinate, RootOfUnity
from .spaces import WpsOrbifold, WpsPoint

DEFAULT_CHART_RADIUS = 0.1
DEFAULT_RESIDUAL_TOL = 1e-9
DEFAULT_FD_STEP = 1e-5
DEFAULT_SV_THRESHOLD = 1e-6
FRAME_TOL = 1e-12
NEWTON_MAX_ITER = 50


def sphere_point(x: WpsPoint) -> np.ndarray:
    """Unit-norm complex representative of an exact point."""
    z = np.array(x.cvalues(), dtype=complex)
    return z / np.linalg.norm(z)


def _to_real(z: np.ndarray) -> np.ndarray:
    out = np.empty(2 * len(z))
    out[0::2] = z.real
    out[1::2] = z.imag
    return out


def _to_complex(v: np.ndarray) -> np.ndarray:
    return v[0::2] + 1j * v[1::2]


def _normalize(z: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(z)
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return z / norm


def evaluate_upstairs(f: MonomialMap, z: np.ndarray) -> np.ndarray:
    """Sphere-normalized coordinate powers z_i -> z_i^{e_i}."""
    w = np.asarray(z, dtype=complex) ** np.array(f.exponents)
    return _normalize(w)


@dataclass(eq=False)
class SliceChart:
    """Orthonormal frame for the slice at ``base`` under the given weights."""

    base: np.ndarray  # complex, unit norm
    weights: tuple[int, ...]
    frame: np.ndarray  # (2n, 2n+2) real rows, orthonormal
    radius: float

    @property
    def dimension(self) -> int:
        return self.frame.shape[0]

    def point(self, coeffs: np.ndarray) -> np.ndarray:
        """Slice point with the given frame coefficients, renormalized to the sphere."""
        v = _to_real(self.base) + np.asarray(coeffs, dtype=float) @ self.frame
        return _normalize(_to_complex(v))

    def coords(self, z: np.ndarray) -> np.ndarray:
        return self.frame @ (_to_real(z) - _to_real(self.base))


def orbit_direction(z: np.ndarray, weights: tuple[int, ...]) -> np.ndarray:
    return 1j * np.array(weights) * np.asarray(z, dtype=complex)


def slice_chart(
    z: np.ndarray, weights: tuple[int, ...], radius: float = DEFAULT_CHART_RADIUS
) -> SliceChart:
    z = _normalize(np.asarray(z, dtype=complex))
    base_r = _to_real(z)
    tangent = _to_real(orbit_direction(z, weights))
    tangent /= np.linalg.norm(tangent)
    seed = np.stack([base_r, tangent])
    q_full, _ = np.linalg.qr(seed.T, mode="complete")
    frame = q_full[:, 2:].T.copy()
    # orient: (base, rotation, frame) positively oriented in ambient coordinates
    if np.linalg.det(np.vstack([base_r, tangent, frame])) < 0:
        frame[-1] *= -1.0
    gram = frame @ frame.T
    assert np.max(np.abs(gram - np.eye(len(frame)))) < FRAME_TOL
    assert np.max(np.abs(frame @ base_r)) < FRAME_TOL
    assert np.max(np.abs(frame @ tangent)) < FRAME_TOL
    return SliceChart(z, tuple(weights), frame, radius)


@dataclass(eq=False)
class LiftEvaluation:
    slice_coords: np.ndarray
    corrected: np.ndarray
    phase: float
    residual: float
    iterations: int

    def to_json(self) -> dict:
        return {
            "slice_coords": list(map(float, self.slice_coords)),
            "corrected": [[float(c.real), float(c.imag)] for c in self.corrected],
            "phase": self.phase,
            "residual": self.residual,
            "iterations": self.iterations,
        }


def _as_sphere(x) -> np.ndarray:
    if isinstance(x, WpsPoint):
        return sphere_point(x)
    return _normalize(np.asarray(x, dtype=complex))


def slice_lift(
    f: MonomialMap,
    x,
    y,
    radius: float = DEFAULT_CHART_RADIUS,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
    max_iter: int = NEWTON_MAX_ITER,
) -> LiftEvaluation:
    """Correct the image of y into the slice at the image of x.

    Finds the unique phase phi with e^{i phi} . f(y) orthogonal to the orbit
    direction at f(x), by Newton iteration on one real unknown starting at 0.
    """
    x = _as_sphere(x)
    y = _as_sphere(y)
    if np.linalg.norm(y - x) > radius:
        raise PreconditionViolatedError(
            f"|y - x| = {np.linalg.norm(y - x):.3g} exceeds the chart radius {radius}"
        )
    q = np.array(f.source.weights)
    tangent_src = orbit_direction(x, f.source.weights)
    if abs(np.vdot(tangent_src, y).real) / np.linalg.norm(tangent_src) > 1e-6:
        raise PreconditionViolatedError("y does not lie in the slice at x")

    r = np.array(f.target.weights)
    c = evaluate_upstairs(f, x)
    w = evaluate_upstairs(f, y)

    # residual(phi) = <e^{i phi r} . w, i*r*c>_R = Im sum_i r_i e^{i r_i phi} w_i conj(c_i)
    inner = w * np.conj(c)

    def residual_and_slope(phi: float) -> tuple[float, float]:
        rot = np.exp(1j * r * phi) * inner
        return float(np.sum(r * rot.imag)), float(np.sum(r * r * rot.real))

    # alternative corrections differ by 2*pi/g for g the image stabilizer order
    support = np.abs(c) > 1e-12
    g_image = int(np.gcd.reduce(r[support]))
    window = np.pi / g_image

    phi = 0.0
    res, slope = residual_and_slope(phi)
    iterations = 0
    while abs(res) >= residual_tol:
        if iterations >= max_iter or slope == 0.0 or abs(phi) >= window:
            raise NewtonDivergedError(
                f"phase correction stalled at phi={phi:.3g}, residual={res:.3g}; "
                "retry with a smaller chart radius"
            )
        phi -= res / slope
        res, slope = residual_and_slope(phi)
        iterations += 1
    if abs(phi) >= window:
        raise NewtonDivergedError(f"phase {phi:.3g} left the uniqueness window {window:.3g}")

    corrected = np.exp(1j * r * phi) * w
    src_chart = slice_chart(x, f.source.weights, radius)
    return LiftEvaluation(
        slice_coords=src_chart.coords(y),
        corrected=corrected,
        phase=phi,
        residual=res,
        iterations=iterations,
    )


@dataclass(frozen=True)
class JacobianCertificate:
    sign: int
    smallest_singular_value: float

    def to_json(self) -> dict:
        return {"sign": self.sign, "smallest_singular_value": self.smallest_singular_value}


def numeric_jacobian(
    f: MonomialMap,
    x,
    step: float = DEFAULT_FD_STEP,
    sv_threshold: float = DEFAULT_SV_THRESHOLD,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
) -> JacobianCertificate:
    """Central-difference Jacobian of the corrected lift across the slice frames.

    Returns the determinant sign together with the smallest singular value;
    raises IrregularPointError when the latter falls below the threshold.
    """
    x = _as_sphere(x)
    src = slice_chart(x, f.source.weights)
    c = evaluate_upstairs(f, x)
    tgt = slice_chart(c, f.target.weights)
    dim = src.dimension
    jac = np.empty((dim, dim))
    lift_radius = max(DEFAULT_CHART_RADIUS, 10 * step)
    for k in range(dim):
        cols = []
        for s in (step, -step):
            coeffs = np.zeros(dim)
            coeffs[k] = s
            y = src.point(coeffs)
            lift = slice_lift(f, x, y, radius=lift_radius, residual_tol=residual_tol)
            cols.append(tgt.frame @ (_to_real(lift.corrected) - _to_real(c)))
        jac[:, k] = (cols[0] - cols[1]) / (2.0 * step)
    smallest = float(np.linalg.svd(jac, compute_uv=False)[-1])
    if smallest <= sv_threshold:
        raise IrregularPointError(
            f"smallest singular value {smallest:.3g} is below the threshold {sv_threshold:.3g}"
        )
    sign = 1 if np.linalg.det(jac) > 0 else -1
    return JacobianCertificate(sign, smallest)


@dataclass(frozen=True)
class ArcSample:
    value: WpsPoint
    raw_count: int
    weighted_count: int


def ring_values_through_axis(space: WpsOrbifold, axis: int, order: int) -> list[WpsPoint]:
    """The axis point plus a ring of full-support values around it.

    Ring members put exp(2*pi*i*j/order) in every non-axis coordinate; choose
    ``order`` coprime to the weights to keep the points pairwise distinct.
    """
    values = [space.axis_point(axis)]
    for j in range(order):
        coords = [
            ExactCoordinate.one() if i == axis else ExactCoordinate(RootOfUnity(j, order))
            for i in range(len(space.weights))
        ]
        values.append(WpsPoint(space, tuple(coords)))
    return values


def weighted_count_profile(
    f: MonomialMap, values: list[WpsPoint], cap: int | None = DEFAULT_ENUMERATION_CAP
) -> list[ArcSample]:
    """Raw and weighted preimage counts at each sampled regular value."""
    samples = []
    for y in values:
        records = preimages(f, y, cap)
        samples.append(ArcSample(y, len(records), sum(rec.weight for rec in records)))
    return samples


def write_count_profile_csv(path, samples: list[ArcSample]) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["value", "raw_count", "weighted_count"])
        for s in samples:
            writer.writerow([s.value.encode(), s.raw_count, s.weighted_count])
