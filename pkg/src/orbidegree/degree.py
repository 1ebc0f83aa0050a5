"""Exact mapping degrees by weighted preimage counting.

For a coordinate-power map and a regular value y with support S, the fibre is
solved exactly: after scaling y's class to a representative fixed upstairs,
the solutions are b-indexed tuples of roots of unity, identified under the
finite residual symmetry (see orbits.py).  Every preimage point in a fixed
fibre has the same isotropy order gcd{q_i : i in S}, the value has isotropy
order gcd{r_i : i in S}, and each point is counted with weight
|G_y| / |G_x| — a positive integer at regular values.  Coordinate-power maps
are holomorphic on charts, so every orientation sign is +1 and the oriented
degree equals the weighted count.

The closed form (prod_i e_i) / d is the fast path; orbit enumeration is the
trusted oracle.  They are never silently swapped: enumeration beyond the cap
raises instead of falling back to the formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    NonIntegralWeightError,
    NotRegularError,
    PreconditionViolatedError,
)
from .maps import MonomialMap
from .orbits import coset_minima, decode
from .roots import ExactCoordinate, RootOfUnity
from .spaces import WpsPoint, isotropy

DEFAULT_ENUMERATION_CAP = 10**7


@dataclass(frozen=True)
class RegularityCertificate:
    """Chart-lift criterion: y is regular iff no zero coordinate carries an exponent > 1."""

    support: tuple[int, ...]
    violations: tuple[tuple[int, int], ...]  # (coordinate index off support, exponent)

    @property
    def regular(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "regular": self.regular,
            "support": list(self.support),
            "violations": [{"index": i, "exponent": e} for i, e in self.violations],
        }


@dataclass(frozen=True)
class PreimageRecord:
    point: WpsPoint
    isotropy_order: int
    weight: int
    sign: int = 1

    def to_json(self) -> dict:
        return {
            "point": self.point.to_json(),
            "isotropy": self.isotropy_order,
            "weight": self.weight,
            "sign": self.sign,
        }


@dataclass(frozen=True)
class DegreeResult:
    weighted_count: int
    mod2: int
    oriented: int
    value: WpsPoint
    certificate: RegularityCertificate
    preimages: tuple[PreimageRecord, ...] | None = None

    def to_json(self) -> dict:
        data = {
            "degree": self.oriented,
            "mod2": self.mod2,
            "weighted_count": self.weighted_count,
            "value": self.value.to_json(),
            "regular": self.certificate.to_json(),
        }
        if self.preimages is not None:
            data["preimages"] = [rec.to_json() for rec in self.preimages]
        return data


def regularity(f: MonomialMap, y: WpsPoint) -> RegularityCertificate:
    if y.space != f.target:
        raise ValueError(f"value lives in {y.space}, not in the target {f.target}")
    sup = y.support
    in_support = set(sup)
    violations = tuple(
        (j, e) for j, e in enumerate(f.exponents) if j not in in_support and e > 1
    )
    return RegularityCertificate(sup, violations)


def is_regular_value(f: MonomialMap, y: WpsPoint) -> bool:
    return regularity(f, y).regular


@dataclass(frozen=True)
class _Fibre:
    """Solved fibre data: coset representatives plus the shared arithmetic context."""

    support: tuple[int, ...]
    codes: np.ndarray
    sub_exponents: tuple[int, ...]
    value_isotropy: int  # gcd of target weights over the support
    point_isotropy: int  # gcd of source weights over the support
    certificate: RegularityCertificate

    @property
    def count(self) -> int:
        return len(self.codes)

    @property
    def weight(self) -> int:
        w = Fraction(self.value_isotropy, self.point_isotropy)
        if w.denominator != 1 or w <= 0:
            raise NonIntegralWeightError(
                f"|G_y|/|G_x| = {w} is not a positive integer; this is a bug"
            )
        return int(w)


def _solve_fibre(f: MonomialMap, y: WpsPoint, cap: int | None) -> _Fibre:
    cert = regularity(f, y)
    if not cert.regular:
        raise NotRegularError(
            f"{y} is a critical value: exponent > 1 off the support at "
            f"indices {[i for i, _ in cert.violations]}"
        )
    sup = cert.support
    q = f.source.weights
    r = f.target.weights
    e_sub = tuple(f.exponents[i] for i in sup)
    g_val = math.gcd(*(r[i] for i in sup))
    m_pt = math.gcd(*(q[i] for i in sup))
    shift = tuple((r[i] // g_val) % f.exponents[i] for i in sup)
    codes = coset_minima(e_sub, shift, cap)
    return _Fibre(sup, codes, e_sub, g_val, m_pt, cert)


def _materialize(f: MonomialMap, y: WpsPoint, fibre: _Fibre) -> tuple[PreimageRecord, ...]:
    digit_rows = decode(fibre.codes, fibre.sub_exponents)
    weight = fibre.weight
    records = []
    for row in digit_rows:
        coords = [ExactCoordinate.zero()] * len(f.exponents)
        for pos, i in enumerate(fibre.support):
            e_i = f.exponents[i]
            base = y.coords[i].root
            turns = Fraction(base.num, base.order * e_i) + Fraction(int(row[pos]), e_i)
            coords[i] = ExactCoordinate(RootOfUnity.from_turns(turns))
        point = WpsPoint(f.source, tuple(coords))
        records.append(PreimageRecord(point, fibre.point_isotropy, weight, 1))
    return tuple(records)


def preimages(
    f: MonomialMap, y: WpsPoint, cap: int | None = DEFAULT_ENUMERATION_CAP
) -> tuple[PreimageRecord, ...]:
    """All preimage points of the regular value y, one record per point.

    Ordering is deterministic: records follow the sorted canonical
    representatives of the fibre cosets.
    """
    fibre = _solve_fibre(f, y, cap)
    return _materialize(f, y, fibre)


def weighted_cardinality(
    f: MonomialMap, y: WpsPoint, cap: int | None = DEFAULT_ENUMERATION_CAP
) -> int:
    """Sum of |G_y|/|G_x| over the fibre of the regular value y.

    Accumulated exactly; integrality is asserted rather than rounded.
    """
    fibre = _solve_fibre(f, y, cap)
    total = Fraction(fibre.count) * Fraction(fibre.value_isotropy, fibre.point_isotropy)
    if total.denominator != 1:
        raise NonIntegralWeightError(f"weighted count {total} is not an integer; this is a bug")
    return int(total)


def degree(
    f: MonomialMap,
    y: WpsPoint | None = None,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
    include_preimages: bool = True,
) -> DegreeResult:
    """Oriented and mod-2 degree of f, probed at y (default [1:...:1] in the target).

    The default probe has full support, hence is always regular; for a
    caller-supplied critical value NotRegularError is raised.
    """
    if y is None:
        y = f.target.all_ones()
    fibre = _solve_fibre(f, y, cap)
    count = fibre.count * fibre.weight
    records = _materialize(f, y, fibre) if include_preimages else None
    return DegreeResult(
        weighted_count=count,
        mod2=count % 2,
        oriented=count,  # holomorphic chart lifts: every sign is +1
        value=y,
        certificate=fibre.certificate,
        preimages=records,
    )


def degree_closed_form(f: MonomialMap) -> int:
    """(prod_i e_i) / d; the fast path the enumeration oracle is checked against."""
    value = Fraction(f.exponent_product, f.equivariance_degree)
    if value.denominator != 1:
        raise NonIntegralWeightError(f"closed form {value} is not an integer; this is a bug")
    return int(value)


def smooth_preimage_check(
    f: MonomialMap, y: WpsPoint, cap: int | None = DEFAULT_ENUMERATION_CAP
) -> bool:
    """True iff every preimage of the smooth regular value y is itself smooth."""
    if isotropy(y).order != 1:
        raise PreconditionViolatedError(f"{y} is not a smooth point")
    if not is_regular_value(f, y):
        raise PreconditionViolatedError(f"{y} is not a regular value")
    return all(rec.isotropy_order == 1 for rec in preimages(f, y, cap))
