"""Weighted projective spaces and finite circle quotients.

A weighted projective space with weights q = (q_0, ..., q_n) is the quotient
of C^{n+1} minus the origin by the circle/C* action gamma . z =
(gamma^{q_0} z_0, ..., gamma^{q_n} z_n).  Points here carry exact
root-of-unity coordinates, so orbit equality is decidable: the canonical form
scales the first nonzero coordinate to 1 and then minimizes the remaining
coordinates lexicographically over the finite residual group.

Circle quotients S^1 // Z_k (free rotations) and S^1 // Z_2 (reflection, a
closed interval with two order-2 endpoints) are the one-dimensional model
family; the reflection quotient is the one supported space with a nonempty
codimension-1 singular stratum.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import NotEffectiveError
from .roots import ExactCoordinate, RootOfUnity


@dataclass(frozen=True)
class WpsOrbifold:
    """CP^n(q): weights must be positive with overall gcd 1 (effective action)."""

    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        weights = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise ValueError("weights must be nonempty")
        if any(w < 1 for w in weights):
            raise ValueError(f"weights must be >= 1, got {weights}")
        if math.gcd(*weights) != 1:
            raise NotEffectiveError(f"weights {weights} have gcd {math.gcd(*weights)} > 1")

    @property
    def complex_dimension(self) -> int:
        return len(self.weights) - 1

    @property
    def dimension(self) -> int:
        """Real dimension 2n."""
        return 2 * self.complex_dimension

    @property
    def lcm(self) -> int:
        return math.lcm(*self.weights)

    def point(self, *coords: str | ExactCoordinate) -> "WpsPoint":
        parsed = tuple(
            c if isinstance(c, ExactCoordinate) else ExactCoordinate.parse(c) for c in coords
        )
        return WpsPoint(self, parsed)

    def all_ones(self) -> "WpsPoint":
        return WpsPoint(self, tuple(ExactCoordinate.one() for _ in self.weights))

    def axis_point(self, index: int) -> "WpsPoint":
        """The point with a single nonzero coordinate (equal to 1) at ``index``."""
        coords = [ExactCoordinate.zero()] * len(self.weights)
        coords[index] = ExactCoordinate.one()
        return WpsPoint(self, tuple(coords))

    def to_json(self) -> dict:
        return {"weights": list(self.weights)}

    @classmethod
    def from_json(cls, data: dict) -> "WpsOrbifold":
        return cls(tuple(int(w) for w in data["weights"]))

    def __str__(self) -> str:
        return "CP%d(%s)" % (self.complex_dimension, ",".join(map(str, self.weights)))


def _canonical_coords(
    weights: tuple[int, ...], coords: tuple[ExactCoordinate, ...]
) -> tuple[ExactCoordinate, ...]:
    """Orbit-canonical representative under the weighted root-of-unity action.

    Scale so the first nonzero coordinate becomes 1 (its exponent can always
    be driven to the minimum 0), then among the q_{i0} residual scalings pick
    the tuple whose remaining coordinates are lexicographically minimal.
    """
    i0 = next(i for i, c in enumerate(coords) if not c.is_zero)
    q0 = weights[i0]
    # particular solution of gamma^{q0} = coords[i0]^{-1}
    base = RootOfUnity.from_turns(coords[i0].root.inverse().turns / q0)
    best = None
    best_key = None
    for t in range(q0):
        gamma = base * RootOfUnity(t, q0)
        cand = tuple(c.times(gamma**w) for c, w in zip(coords, weights))
        key = tuple(c.sort_key() for c in cand)
        if best_key is None or key < best_key:
            best, best_key = cand, key
    return best


@dataclass(frozen=True)
class WpsPoint:
    """A point [z_0 : ... : z_n]_q with zero-or-root-of-unity coordinates.

    Stored in canonical form, so == and hash decide orbit equality exactly.
    """

    space: WpsOrbifold
    coords: tuple[ExactCoordinate, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != len(self.space.weights):
            raise ValueError("coordinate count does not match the weight count")
        if all(c.is_zero for c in self.coords):
            raise ValueError("at least one coordinate must be nonzero")
        object.__setattr__(self, "coords", _canonical_coords(self.space.weights, self.coords))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords) if not c.is_zero)

    def translated(self, gamma: RootOfUnity) -> "WpsPoint":
        """Act by gamma: coordinate i is multiplied by gamma^{q_i}."""
        return WpsPoint(
            self.space,
            tuple(c.times(gamma**w) for c, w in zip(self.coords, self.space.weights)),
        )

    def cvalues(self) -> list[complex]:
        return [c.cvalue() for c in self.coords]

    def encode(self) -> str:
        """Wire encoding: coordinates joined by commas, each ``0`` or ``a/m``."""
        return ",".join(str(c) for c in self.coords)

    def to_json(self) -> dict:
        return {"weights": list(self.space.weights), "coords": [c.to_json() for c in self.coords]}

    @classmethod
    def from_json(cls, data: dict) -> "WpsPoint":
        space = WpsOrbifold(tuple(int(w) for w in data["weights"]))
        return cls(space, tuple(ExactCoordinate.from_json(c) for c in data["coords"]))

    def __str__(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]_" + str(self.space.weights)


@dataclass(frozen=True)
class IsotropyGroup:
    """Cyclic isotropy Z_order, acting on a centered chart with the given weights mod order."""

    order: int
    chart_weights: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return self.order == 1


def isotropy(x: WpsPoint) -> IsotropyGroup:
    """Isotropy group of x: cyclic of order gcd{q_i : i in support(x)}.

    Chart weights are q_j mod order for every j other than the slicing
    coordinate (the first support index).
    """
    sup = x.support
    q = x.space.weights
    order = math.gcd(*(q[i] for i in sup))
    i0 = sup[0]
    chart = tuple(q[j] % order for j in range(len(q)) if j != i0)
    return IsotropyGroup(order, chart)


def singular_dimension(x: WpsPoint) -> int:
    """Real dimension of the chart subspace fixed by the isotropy action.

    Each chart coordinate with weight divisible by the isotropy order
    contributes one fixed complex line (two real dimensions).
    """
    iso = isotropy(x)
    return 2 * sum(1 for w in iso.chart_weights if w == 0)


@dataclass(frozen=True)
class CircleQuotient:
    """S^1 // G for G a rotation group Z_k (free) or the reflection Z_2."""

    group: str  # "rotation" | "reflection"
    order: int
    orientable: bool

    @classmethod
    def rotation(cls, k: int = 1) -> "CircleQuotient":
        if k < 1:
            raise ValueError("rotation order must be >= 1")
        return cls("rotation", k, True)

    @classmethod
    def reflection(cls) -> "CircleQuotient":
        return cls("reflection", 2, False)

    @property
    def is_reflection(self) -> bool:
        return self.group == "reflection"

    @property
    def period(self) -> float:
        """Length of the fundamental domain: 2*pi/k for rotations, pi for the reflection."""
        return math.pi if self.is_reflection else 2.0 * math.pi / self.order

    def fold(self, theta: float) -> float:
        """Canonical representative of the orbit of the angle theta."""
        two_pi = 2.0 * math.pi
        theta = theta % two_pi
        if self.is_reflection:
            return min(theta, two_pi - theta)
        return theta % self.period

    def isotropy_order(self, theta: float, tol: float = 1e-8) -> int:
        if self.is_reflection:
            folded = self.fold(theta)
            if folded < tol or abs(folded - math.pi) < tol:
                return 2
        return 1

    def to_json(self) -> dict:
        return {"kind": self.group, "order": self.order}

    def __str__(self) -> str:
        return "S1//Z%d(%s)" % (self.order, self.group)


@dataclass(frozen=True)
class StratumComponent:
    support: tuple[int, ...] | None
    isotropy_order: int
    description: str


@dataclass(frozen=True)
class StratumRecord:
    sdim: int
    components: tuple[StratumComponent, ...]
    open_dense: bool = False


@dataclass(frozen=True)
class StrataReport:
    records: tuple[StratumRecord, ...]
    codim1_empty: bool
    orientable: bool

    def isotropy_orders(self) -> set[int]:
        return {c.isotropy_order for r in self.records for c in r.components}

    def to_json(self) -> dict:
        return {
            "codim1_empty": self.codim1_empty,
            "orientable": self.orientable,
            "strata": [
                {
                    "sdim": r.sdim,
                    "open_dense": r.open_dense,
                    "components": [
                        {
                            "support": list(c.support) if c.support is not None else None,
                            "isotropy": c.isotropy_order,
                            "description": c.description,
                        }
                        for c in r.components
                    ],
                }
                for r in self.records
            ],
        }


def _support_stratum_data(weights: tuple[int, ...], sup: tuple[int, ...]) -> tuple[int, int]:
    """(isotropy order, singular dimension) shared by all points with the given support."""
    order = math.gcd(*(weights[i] for i in sup))
    i0 = sup[0]
    sdim = 2 * sum(1 for j in range(len(weights)) if j != i0 and weights[j] % order == 0)
    return order, sdim


def strata(space: WpsOrbifold | CircleQuotient) -> StrataReport:
    """Stratification by singular dimension, with orientability flags.

    Weighted projective spaces are stratified per support class (coordinate
    subsets sharing a weight gcd); complex charts force every singular
    dimension to be even, so the codimension-1 stratum is always empty.
    """
    if isinstance(space, CircleQuotient):
        return _circle_strata(space)

    weights = space.weights
    n1 = len(weights)
    by_sdim: dict[int, list[StratumComponent]] = {}
    for size in range(1, n1 + 1):
        for sup in itertools.combinations(range(n1), size):
            order, sdim = _support_stratum_data(weights, sup)
            comp = StratumComponent(
                support=sup,
                isotropy_order=order,
                description=f"points with support {set(sup)}",
            )
            by_sdim.setdefault(sdim, []).append(comp)
    records = tuple(
        StratumRecord(sdim, tuple(by_sdim[sdim]), open_dense=(sdim == space.dimension))
        for sdim in sorted(by_sdim, reverse=True)
    )
    codim1_empty = all(r.sdim != space.dimension - 1 for r in records)
    return StrataReport(records, codim1_empty=codim1_empty, orientable=True)


def _circle_strata(space: CircleQuotient) -> StrataReport:
    if not space.is_reflection:
        record = StratumRecord(
            1,
            (StratumComponent(None, 1, "the whole quotient circle (free rotation action)"),),
            open_dense=True,
        )
        return StrataReport((record,), codim1_empty=True, orientable=True)
    interior = StratumRecord(
        1,
        (StratumComponent(None, 1, "open interval of smooth points"),),
        open_dense=True,
    )
    endpoints = StratumRecord(
        0,
        (
            StratumComponent(None, 2, "endpoint at angle 0"),
            StratumComponent(None, 2, "endpoint at angle pi"),
        ),
    )
    # dim 1 with a nonempty 0-stratum: the codimension-1 stratum is not empty
    return StrataReport((interior, endpoints), codim1_empty=False, orientable=False)
