"""Acceptance suite: one test per shipping criterion, each printing a status line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
"""

import math

import numpy as np

from orbidegree.circle import CircleMap, circle_degree2, covering_degree
from orbidegree.degree import (
    degree,
    degree_closed_form,
    is_regular_value,
    preimages,
    weighted_cardinality,
)
from orbidegree.maps import MonomialMap, compose
from orbidegree.slices import (
    numeric_jacobian,
    ring_values_through_axis,
    slice_chart,
    slice_lift,
    sphere_point,
    weighted_count_profile,
    write_count_profile_csv,
)
from orbidegree.spaces import WpsOrbifold
from orbidegree.verify import random_composable_pairs, random_monomial_maps

WEIGHT_SETS = [(1, 3), (2, 3), (1, 2, 3), (3, 4, 5)] + [
    (1,) * n + (k,) for k in (2, 3, 5) for n in (1, 2)
]


def _passes(number: int, description: str) -> None:
    print(f"criterion {number:02d} PASS  {description}")


def test_criterion_01_power_map_degrees():
    for q in WEIGHT_SETS:
        f = MonomialMap.from_projective(q)
        expected = math.prod(q)
        assert degree(f, include_preimages=False).oriented == expected
        assert degree_closed_form(f) == expected
    _passes(1, "degree of the map onto CP^n(q) equals q_0*...*q_n, zero tolerance")


def test_criterion_02_projecting_map_degrees():
    for q in WEIGHT_SETS:
        g = MonomialMap.to_projective(q)
        n = len(q) - 1
        expected = math.lcm(*q) ** n // math.prod(q)
        assert degree(g, include_preimages=False).oriented == expected
        assert degree_closed_form(g) == expected
    _passes(2, "degree of the map back to CP^n equals lcm(q)^n / (q_0*...*q_n), zero tolerance")


def test_criterion_03_between_map_degrees():
    for q, r in (((1, 3), (1, 2)), ((2, 3), (1, 5)), ((1, 2, 3), (1, 1, 2))):
        h = MonomialMap.between(q, r)
        n = len(q) - 1
        expected = math.lcm(*q) ** n // math.prod(q) * math.prod(r)
        assert degree(h, include_preimages=False).oriented == expected
    _passes(3, "degree between weighted spaces equals lcm(q)^n/prod(q) * prod(r), zero tolerance")


def test_criterion_04_nonsmooth_regular_value():
    for k in (2, 3, 5):
        for n in (1, 2):
            f = MonomialMap.from_projective((1,) * n + (k,))
            vertex = f.target.axis_point(n)
            assert is_regular_value(f, vertex)
            records = preimages(f, vertex)
            assert len(records) == 1
            assert records[0].weight == k
            assert records[0].point == f.source.axis_point(n)
    _passes(4, "the vertex value certifies regular with one preimage of weight k")


def test_criterion_05_smooth_critical_value():
    for k in (2, 3, 5):
        for n in (1, 2):
            f = MonomialMap.from_projective((1,) * n + (k,))
            assert not is_regular_value(f, f.target.axis_point(0))
    _passes(5, "the opposite axis value certifies NOT regular")


def test_criterion_06_counterexample_reproduction():
    fold = CircleMap.fold()
    top = circle_degree2(fold, math.pi / 2)
    assert top.mod2 == 1 and top.weighted_count == 1
    assert len(top.preimages.points) == 1
    assert abs(top.preimages.points[0].angle - math.pi / 2) < 1e-10
    bottom = circle_degree2(fold, 3 * math.pi / 2)
    assert bottom.mod2 == 0 and bottom.weighted_count == 0
    _passes(6, "fold map: mod-2 degree 1 at (0,1) and 0 at (0,-1); angles within 1e-10")


def test_criterion_07_covering_degrees():
    for k in range(2, 7):
        result = circle_degree2(CircleMap.covering_projection(k), 0.375 * 2 * math.pi / k)
        assert result.weighted_count == k
    grid = [
        (1, 1, 1), (1, 2, 1), (2, 2, 1), (2, 4, 1), (2, 4, 2),
        (3, 6, 1), (3, 6, 2), (3, 3, 1), (4, 8, 2), (6, 6, 1),
    ]
    assert len(grid) == 10
    for k, m, b in grid:
        induced = covering_degree(k, m, b)
        upstairs = covering_degree(1, m, 1)
        assert induced * k == upstairs * b
        assert induced == m * b // k
    _passes(7, "rotation quotient projections have degree |G|; 10-case scaling grid exact")


def test_criterion_08_oracle_equivalence():
    maps = random_monomial_maps(50, seed=2024, max_product=100_000)
    assert len(maps) == 50
    assert max(f.exponent_product for f in maps) <= 100_000
    for f in maps:
        enumerated = weighted_cardinality(f, f.target.all_ones())
        assert enumerated == degree_closed_form(f)
    _passes(8, "orbit enumeration equals the closed form on 50 random composed maps")


def test_criterion_09_multiplicativity():
    fq = MonomialMap.from_projective((1, 3))
    gq = MonomialMap.to_projective((1, 3))
    fr = MonomialMap.from_projective((1, 2))
    paper_pairs = [(fq, gq), (gq, fr), (fq, MonomialMap.identity(fq.target))]
    pairs = paper_pairs + random_composable_pairs(20, seed=99)
    for f, g in pairs:
        df = degree(f, include_preimages=False).oriented
        dg = degree(g, include_preimages=False).oriented
        assert degree(compose(f, g), include_preimages=False).oriented == df * dg
    _passes(9, "degree(g o f) = degree(g)*degree(f) on 20 random pairs plus the 3 compositions")


def test_criterion_10_local_constancy_arc(tmp_path):
    f13 = MonomialMap.from_projective((1, 3))
    values = ring_values_through_axis(f13.target, axis=1, order=25)
    assert len(values) >= 20
    samples = weighted_count_profile(f13, values)
    assert {s.raw_count for s in samples} == {3, 1}
    assert all(s.weighted_count == 3 for s in samples)
    write_count_profile_csv(tmp_path / "arc.csv", samples)
    for y in values:
        for rec in preimages(f13, y):
            cert = numeric_jacobian(f13, sphere_point(rec.point))
            assert cert.sign == 1
            assert cert.smallest_singular_value > 1e-6
    _passes(10, "raw counts take values {3,1} while the weighted count stays 3; signs all +1")


def test_criterion_11_slice_lift_contract():
    rng = np.random.default_rng(123)
    maps = random_monomial_maps(20, seed=17, max_product=2_000)
    triples = 0
    for f in maps:
        n1 = len(f.source.weights)
        for _ in range(5):
            z = rng.normal(size=n1) + 1j * rng.normal(size=n1)
            z /= np.linalg.norm(z)
            chart = slice_chart(z, f.source.weights)
            s = rng.normal(size=chart.dimension)
            s *= 1e-3 / np.linalg.norm(s)
            lift = slice_lift(f, z, chart.point(s))
            assert abs(lift.residual) < 1e-9
            triples += 1
    assert triples == 100
    # phase invariance under the isotropy of the base point
    configs = [
        (MonomialMap.to_projective((1, 3)), WpsOrbifold((1, 3)).axis_point(1), 3),
        (MonomialMap.to_projective((1, 1, 3)), WpsOrbifold((1, 1, 3)).axis_point(2), 3),
        (MonomialMap.to_projective((2, 2, 3)), WpsOrbifold((2, 2, 3)).point("0/1", "0/1", "0"), 2),
    ]
    for f, x_exact, order in configs:
        x = sphere_point(x_exact)
        chart = slice_chart(x, f.source.weights)
        gamma = np.exp(2j * math.pi / order * np.array(f.source.weights))
        for _ in range(4):
            s = rng.normal(size=chart.dimension)
            s *= 1e-3 / np.linalg.norm(s)
            y = chart.point(s)
            assert abs(slice_lift(f, x, y).phase - slice_lift(f, x, gamma * y).phase) < 1e-9
    _passes(11, "Newton residual < 1e-9 on 100 random triples; phase invariant under isotropy")


def test_criterion_12_same_underlying_map():
    even, odd = CircleMap.flat_even(), CircleMap.flat_odd()
    values = np.linspace(0.12, math.pi - 0.12, 50)
    for value in values:
        a = circle_degree2(even, float(value))
        b = circle_degree2(odd, float(value))
        assert a.mod2 == b.mod2
        assert a.weighted_count == b.weighted_count
    _passes(12, "the two flat maps agree in mod-2 degree at 50 sampled smooth regular values")
