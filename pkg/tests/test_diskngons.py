import math

import numpy as np
import pytest

from widthbench.bodies import GeometryError
from widthbench.diskngons import (HEXAGON_ALPHA1, InscribedNgon,
                                  best_known_hexagon, best_known_octagon,
                                  deltoid_admissible_range, deltoid_family,
                                  hexagon_flex, hexagon_flex_range,
                                  hexagon_width_formula, regular_odd_ngon,
                                  regular_odd_width, search_ngon,
                                  widest_deltoid)
from widthbench.bodies import cross2

SQRT3 = math.sqrt(3.0)


def edge_distance_min_width(vertices):
    """Independent oracle: per edge, distance to the farthest vertex."""
    n = len(vertices)
    best = math.inf
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        e = b - a
        L = np.linalg.norm(e)
        if L < 1e-14:
            continue
        nrm = np.array([e[1], -e[0]]) / L
        dists = np.abs((vertices - a) @ nrm)
        best = min(best, float(dists.max()))
    return best


def test_regular_odd_widths():
    for n in (3, 5, 7, 9):
        gon = regular_odd_ngon(n)
        want = 0.5 + 0.5 * math.cos(math.pi / n)
        assert gon.min_width == pytest.approx(want, abs=1e-9)
        assert gon.min_width == pytest.approx(
            edge_distance_min_width(gon.vertices), abs=1e-12)
    assert regular_odd_ngon(3).min_width == pytest.approx(0.75, abs=1e-12)
    assert regular_odd_ngon(5).min_width == pytest.approx(0.904508, abs=1e-6)
    assert regular_odd_ngon(7).min_width == pytest.approx(0.950484, abs=1e-6)
    with pytest.raises(GeometryError, match="use search"):
        regular_odd_ngon(4)


def test_regular_odd_local_optimality():
    rng = np.random.default_rng(0)
    for n in (3, 5, 7, 9):
        base = np.radians(regular_odd_ngon(n).angles)
        w0 = regular_odd_width(n)
        for _ in range(200):
            pert = base + rng.uniform(-0.01, 0.01, n)
            from widthbench.diskngons import _ngon_min_width

            assert _ngon_min_width(pert) <= w0 + 1e-9


def test_deltoid_values():
    d = widest_deltoid()
    assert d.min_width == pytest.approx(0.7698, abs=1e-3)
    assert d.min_width == pytest.approx(4 * SQRT3 / 9, abs=1e-9)
    assert d.min_width == pytest.approx(edge_distance_min_width(d.vertices),
                                        abs=1e-12)
    assert np.abs(np.linalg.norm(d.vertices, axis=1) - 0.5).max() < 1e-12
    # beats the inscribed square and the degenerate triangle
    assert d.min_width > math.sqrt(2) / 2
    assert d.min_width > 0.75


def test_deltoid_family_sweep():
    d = widest_deltoid()
    lo, hi = deltoid_admissible_range()
    assert deltoid_family(180.0).min_width == pytest.approx(d.min_width,
                                                            abs=1e-9)
    for x in np.linspace(lo + 1e-9, hi - 1e-9, 1000):
        assert deltoid_family(x).min_width >= d.min_width - 1e-9


def test_deltoid_extremes_are_trapezia():
    lo, hi = deltoid_admissible_range()
    for x in (lo + 1e-9, hi - 1e-9):
        gon = deltoid_family(x)
        sides = sorted(
            float(np.linalg.norm(gon.vertices[i] - gon.vertices[(i + 1) % 4]))
            for i in range(4))
        for s in sides[1:]:
            assert s == pytest.approx(math.sqrt(2 / 3), abs=1e-4)


def test_deltoid_family_rejects_outside():
    lo, hi = deltoid_admissible_range()
    with pytest.raises(GeometryError, match="outside admissible arc"):
        deltoid_family(lo - 1.0)
    with pytest.raises(GeometryError, match="outside admissible arc"):
        deltoid_family(hi + 1.0)


def test_hexagon_record():
    h = best_known_hexagon()
    assert HEXAGON_ALPHA1 == pytest.approx(69.385, abs=1e-3)
    assert h.min_width == pytest.approx(0.90786, abs=1e-4)
    assert h.min_width == pytest.approx(hexagon_width_formula(HEXAGON_ALPHA1),
                                        abs=1e-9)
    assert h.angles[1] == pytest.approx(2 * HEXAGON_ALPHA1)
    assert h.angles[2] == pytest.approx(180.0)


def test_hexagon_flex():
    h = best_known_hexagon()
    lo, hi = hexagon_flex_range()
    assert lo == pytest.approx(360.0 - 3 * HEXAGON_ALPHA1, abs=1e-12)
    assert hi == pytest.approx(3 * HEXAGON_ALPHA1, abs=1e-12)
    # published endpoints are rounded from the rounded alpha1
    assert lo == pytest.approx(151.845, abs=2e-3)
    assert hi == pytest.approx(208.155, abs=2e-3)
    for a3 in np.linspace(lo, hi, 50):
        assert hexagon_flex(a3).min_width == pytest.approx(h.min_width,
                                                           abs=1e-6)
    assert hexagon_flex(180.0).angles == pytest.approx(h.angles)
    v = hexagon_flex(lo).vertices
    assert abs(cross2(v[2] - v[1], v[5] - v[4])) < 1e-6
    v = hexagon_flex(hi).vertices
    assert abs(cross2(v[3] - v[2], v[0] - v[5])) < 1e-6
    with pytest.raises(GeometryError):
        hexagon_flex(hi + 1.0)


def test_octagon_record():
    o = best_known_octagon()
    assert o.min_width >= 0.95143 - 1e-4
    assert o.min_width == pytest.approx(
        edge_distance_min_width(o.vertices), abs=1e-12)
    angle_set = sorted(round(a % 360.0, 6) for a in o.angles)
    mirrored = sorted(round((360.0 - a) % 360.0, 6) for a in o.angles)
    assert angle_set == mirrored


def test_every_ngon_bounded_by_edge_strips():
    for gon in (widest_deltoid(), best_known_hexagon(), best_known_octagon(),
                regular_odd_ngon(5)):
        assert gon.min_width <= 1.0
        v = gon.vertices
        n = len(v)
        for i in range(n):
            a, b = v[i], v[(i + 1) % n]
            e = b - a
            L = np.linalg.norm(e)
            if L < 1e-14:
                continue
            center_dist = abs(cross2(e / L, -a))
            assert gon.min_width <= 0.5 + center_dist + 1e-12


def test_invalid_angles_rejected():
    with pytest.raises(GeometryError):
        InscribedNgon(3, [10.0, 10.0, 360.0])
    with pytest.raises(GeometryError):
        InscribedNgon(3, [10.0, 400.0, 360.0])


def test_search_ngon_quick():
    gon = search_ngon(5, seed=1, iters=400)
    assert gon.min_width == pytest.approx(regular_odd_width(5), abs=1e-6)
    gaps = np.diff(np.radians([0.0] + list(gon.angles)))
    assert np.abs(gaps - 2 * math.pi / 5).max() <= 1e-4
    gon4 = search_ngon(4, seed=1, iters=800)
    assert gon4.min_width >= 0.7698 - 1e-3
