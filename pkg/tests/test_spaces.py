import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbidegree.errors import NotEffectiveError
from orbidegree.roots import ExactCoordinate, RootOfUnity
from orbidegree.spaces import (
    CircleQuotient,
    WpsOrbifold,
    WpsPoint,
    isotropy,
    singular_dimension,
    strata,
)


def coprime_weights(draw_entries):
    return draw_entries.filter(lambda w: math.gcd(*w) == 1)


weight_tuples = coprime_weights(
    st.lists(st.integers(min_value=1, max_value=6), min_size=2, max_size=4).map(tuple)
)


@st.composite
def spaces_with_points(draw):
    weights = draw(weight_tuples)
    coords = []
    for _ in weights:
        if draw(st.booleans()):
            coords.append(ExactCoordinate.zero())
        else:
            order = draw(st.integers(min_value=1, max_value=12))
            coords.append(ExactCoordinate.unit(draw(st.integers(min_value=0, max_value=11)), order))
    if all(c.is_zero for c in coords):
        coords[0] = ExactCoordinate.one()
    space = WpsOrbifold(weights)
    return WpsPoint(space, tuple(coords))


gammas = st.builds(
    RootOfUnity, st.integers(min_value=0, max_value=23), st.integers(min_value=1, max_value=24)
)


def test_wps_construction():
    assert WpsOrbifold((1, 1)).complex_dimension == 1
    assert WpsOrbifold((1, 3)).dimension == 2
    assert WpsOrbifold((1, 2, 3)).lcm == 6
    with pytest.raises(NotEffectiveError):
        WpsOrbifold((2, 4))
    with pytest.raises(ValueError):
        WpsOrbifold((0, 1))
    with pytest.raises(ValueError):
        WpsOrbifold(())


def test_point_validation():
    space = WpsOrbifold((1, 3))
    with pytest.raises(ValueError):
        space.point("0", "0")
    with pytest.raises(ValueError):
        space.point("0/1")


def test_point_equality_is_orbit_equality():
    # ordinary projective line: [1:1] == [xi:xi] for xi = exp(2*pi*i/3)
    line = WpsOrbifold((1, 1))
    assert line.point("0/1", "0/1") == line.point("1/3", "1/3")
    # weighted: gamma acts with exponents (1, 3)
    space = WpsOrbifold((1, 3))
    base = space.point("0/1", "1/5")
    gamma = RootOfUnity(1, 7)
    acted = space.point(
        base.coords[0].times(gamma**1), base.coords[1].times(gamma**3)
    )
    assert acted == base
    assert space.point("0/1", "1/5") != space.point("0/1", "2/5")


@settings(deadline=None)
@given(spaces_with_points(), gammas)
def test_equality_invariant_under_weighted_action(point, gamma):
    assert point.translated(gamma) == point
    assert hash(point.translated(gamma)) == hash(point)


@settings(deadline=None)
@given(spaces_with_points())
def test_full_support_points_are_smooth(point):
    if len(point.support) == len(point.space.weights):
        assert isotropy(point).order == 1


def test_isotropy_paper_examples():
    assert isotropy(WpsOrbifold((1, 3)).axis_point(1)).order == 3
    for k in (2, 3, 5):
        space = WpsOrbifold((1, 1, 1, k))
        assert isotropy(space.axis_point(3)).order == k
    assert isotropy(WpsOrbifold((1, 3)).all_ones()).order == 1


def _oracle_singular_dimension(point):
    """Independent fixed-subspace oracle: find the stabilizer by float search,
    average the chart action over it, and count eigenvalue-1 directions."""
    weights = point.space.weights
    z = point.cvalues()
    sup = point.support
    modulus = math.prod(weights[i] for i in sup)
    stabilizer = []
    for a in range(modulus):
        gamma = cmath.exp(2j * cmath.pi * a / modulus)
        if all(abs(gamma ** weights[i] * z[i] - z[i]) < 1e-9 for i in sup):
            stabilizer.append(a)
    i0 = sup[0]
    fixed = 0
    for j in range(len(weights)):
        if j == i0:
            continue
        avg = sum(cmath.exp(2j * cmath.pi * a * weights[j] / modulus) for a in stabilizer)
        avg /= len(stabilizer)
        if abs(avg - 1) < 1e-9:
            fixed += 1
    return 2 * fixed


def test_singular_dimension_examples():
    smooth = WpsOrbifold((1, 3)).all_ones()
    assert singular_dimension(smooth) == 2 == WpsOrbifold((1, 3)).dimension
    # frozen from the fixed-subspace oracle below
    vertex13 = WpsOrbifold((1, 3)).axis_point(1)
    assert singular_dimension(vertex13) == 0
    assert _oracle_singular_dimension(vertex13) == 0
    vertex113 = WpsOrbifold((1, 1, 3)).axis_point(2)
    assert singular_dimension(vertex113) == 0
    assert _oracle_singular_dimension(vertex113) == 0


@settings(deadline=None, max_examples=50)
@given(spaces_with_points())
def test_singular_dimension_matches_oracle(point):
    assert singular_dimension(point) == _oracle_singular_dimension(point)


@settings(deadline=None, max_examples=50)
@given(spaces_with_points())
def test_sdim_full_iff_smooth(point):
    full = singular_dimension(point) == point.space.dimension
    assert full == (isotropy(point).order == 1)


def test_strata_reflection_quotient():
    report = strata(CircleQuotient.reflection())
    assert report.codim1_empty is False
    assert report.orientable is False
    endpoint_components = [
        c for r in report.records if r.sdim == 0 for c in r.components
    ]
    assert len(endpoint_components) == 2
    assert all(c.isotropy_order == 2 for c in endpoint_components)
    top = [r for r in report.records if r.sdim == 1]
    assert top and top[0].open_dense


def test_strata_rotation_quotient_is_manifold():
    report = strata(CircleQuotient.rotation(4))
    assert report.codim1_empty is True
    assert report.orientable is True
    assert report.isotropy_orders() == {1}


def test_strata_wps_examples():
    report = strata(WpsOrbifold((1, 3)))
    assert report.codim1_empty is True
    assert report.orientable is True
    singular = [
        c for r in report.records if not r.open_dense for c in r.components
    ]
    assert [(c.support, c.isotropy_order) for c in singular] == [((1,), 3)]

    plain = strata(WpsOrbifold((1, 1)))
    assert plain.isotropy_orders() == {1}
    assert all(r.open_dense for r in plain.records)


@given(weight_tuples)
def test_strata_partition_and_codim1(weights):
    space = WpsOrbifold(weights)
    report = strata(space)
    assert report.codim1_empty is True
    assert report.orientable is True
    supports = [c.support for r in report.records for c in r.components]
    assert len(supports) == len(set(supports)) == 2 ** len(weights) - 1
    top = [r for r in report.records if r.open_dense]
    assert len(top) == 1 and top[0].sdim == space.dimension


def test_circle_quotient_folding():
    refl = CircleQuotient.reflection()
    assert refl.fold(3 * math.pi / 2) == pytest.approx(math.pi / 2)
    assert refl.isotropy_order(0.0) == 2
    assert refl.isotropy_order(math.pi) == 2
    assert refl.isotropy_order(1.0) == 1
    rot = CircleQuotient.rotation(3)
    assert rot.fold(2 * math.pi / 3 + 0.1) == pytest.approx(0.1)
    assert rot.isotropy_order(0.0) == 1


def test_point_json_round_trip():
    space = WpsOrbifold((1, 2, 3))
    point = space.point("0", "1/4", "0/1")
    assert WpsPoint.from_json(point.to_json()) == point
    assert WpsOrbifold.from_json(space.to_json()) == space
    # the wire encoding parses back to the same orbit
    assert space.point(*point.encode().split(",")) == point
