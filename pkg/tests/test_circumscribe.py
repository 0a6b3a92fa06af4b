import math

import numpy as np
import pytest

from widthbench.bodies import (Ball, GeometryError, Polytope, ReuleauxPolygon,
                               angle_dir, disk, point_to_polygon_distance,
                               width)
from widthbench.chords import central_symmetrization
from widthbench.circumscribe import (ball_hull, circumscribe_small_diameter,
                                     circumscribe_with_info,
                                     complete_to_constant_width_2d,
                                     delta_table, delta_upper_bound,
                                     regular_circumscribed_ngon)
from widthbench.linefamilies import orthogonal_axes, planar_family
from widthbench.measure import diameter

from helpers import random_polygon

SQRT3 = math.sqrt(3.0)


def equilateral_triangle():
    ang = np.radians([90.0, 210.0, 330.0])
    return Polytope(np.column_stack([np.cos(ang), np.sin(ang)]) / SQRT3)


def hausdorff_rings(a, b):
    d1 = point_to_polygon_distance(a, b).max()
    d2 = point_to_polygon_distance(b, a).max()
    return float(max(d1, d2))


def test_ball_hull_triangle_is_reuleaux_region():
    tri = equilateral_triangle()
    hull = ball_hull(tri, 1.0, resolution=4096)
    ref = ReuleauxPolygon(3, 1.0, pose=math.radians(90.0))
    assert hausdorff_rings(ref.boundary_points(4096),
                           hull.vertices) <= 2 * math.pi / 4096


def test_ball_hull_of_disk_is_disk():
    hull = ball_hull(disk(1.0), 1.0, resolution=2048)
    radii = np.linalg.norm(hull.vertices, axis=1)
    assert np.abs(radii - 0.5).max() <= 1e-3


def test_ball_hull_segment_is_lens():
    seg = Polytope([[0, 0], [1, 0]], degenerate_ok=True)
    lens = ball_hull(seg, 1.0, resolution=2048)
    for v in lens.vertices:
        assert np.linalg.norm(v - [0, 0]) <= 1.0 + 1e-9
        assert np.linalg.norm(v - [1, 0]) <= 1.0 + 1e-9
    assert lens.vertices[:, 1].max() == pytest.approx(SQRT3 / 2, abs=1e-6)
    assert lens.vertices[:, 1].min() == pytest.approx(-SQRT3 / 2, abs=1e-6)


def test_ball_hull_radius_precondition():
    with pytest.raises(GeometryError, match="diameter exceeds"):
        ball_hull(equilateral_triangle(), 0.8)


def test_completion_triangle_to_reuleaux():
    tri = equilateral_triangle()
    result = complete_to_constant_width_2d(tri, eps=1e-3)
    assert result.width_error <= 1e-3
    ref = ReuleauxPolygon(3, 1.0, pose=math.radians(90.0)).boundary_points(4096)
    assert hausdorff_rings(ref, result.body.vertices) <= 5e-3
    for t in np.linspace(0, math.pi, 360, endpoint=False):
        assert width(result.body, angle_dir(t)) == pytest.approx(1.0,
                                                                 abs=1e-3)
    assert diameter(result.body)[0] <= 1.0 + 1e-9
    # contains its input
    for v in tri.vertices:
        assert result.body.contains(v, 1e-9)


def test_completion_of_reuleaux_is_identity():
    r5 = ReuleauxPolygon(5, 1.0)
    result = complete_to_constant_width_2d(r5, eps=1e-3)
    assert result.hausdorff_from_input <= 1e-3
    assert result.width_error <= 1e-3


def test_completion_requires_unit_diameter():
    with pytest.raises(GeometryError, match="normalized to diameter 1"):
        complete_to_constant_width_2d(equilateral_triangle().scaled(2.0))


def test_disk_circumscription_equality():
    for m in range(2, 9):
        poly = circumscribe_small_diameter(disk(1.0), planar_family(m))
        want = 1.0 / math.cos(math.pi / (2 * m))
        assert diameter(poly)[0] == pytest.approx(want, abs=1e-6)
        assert len(poly.vertices) == 2 * m
        ang = np.sort(np.arctan2(poly.vertices[:, 1], poly.vertices[:, 0]))
        gaps = np.diff(np.concatenate([ang, [ang[0] + 2 * math.pi]]))
        assert np.ptp(gaps) < 1e-9


def test_ball3_circumscription_cube():
    poly = circumscribe_small_diameter(Ball([0, 0, 0], 0.5),
                                       orthogonal_axes(3))
    assert len(poly.facet_normals) == 6
    assert diameter(poly)[0] == pytest.approx(SQRT3, abs=1e-9)


def test_3d_noncw_rejected():
    cube = Polytope([[x, y, z] for x in (0, 1) for y in (0, 1)
                     for z in (0, 1)])
    with pytest.raises(GeometryError, match="3D completion unsupported"):
        circumscribe_small_diameter(cube, orthogonal_axes(3))


def test_random_polygon_circumscription():
    rng = np.random.default_rng(0)
    bound = 1.0 / math.cos(math.pi / 6) + 4e-3
    for _ in range(8):
        poly = random_polygon(rng)
        out, completion, strips = circumscribe_with_info(
            poly, planar_family(3), eps=1e-3)
        d0 = diameter(poly)[0]
        assert diameter(out)[0] / d0 <= bound
        assert len(out.facet_normals) <= 6
        for v in poly.vertices:
            assert out.contains(v, 1e-9 * d0)
        assert completion is not None
        assert completion.width_error <= 1e-3


def test_symmetrized_intersection_keeps_diameter():
    out = circumscribe_small_diameter(disk(1.0), planar_family(3))
    sym = central_symmetrization(out)
    assert diameter(sym)[0] == pytest.approx(diameter(out)[0], abs=1e-9)


def test_delta_values():
    assert delta_upper_bound(3, 8).value == pytest.approx(1.5275, abs=1e-3)
    assert delta_upper_bound(3, 16).value == pytest.approx(1.199, abs=1e-3)
    row6 = delta_upper_bound(3, 6)
    assert row6.value == pytest.approx(SQRT3, abs=1e-6)
    assert "1.773" in row6.note
    with pytest.raises(GeometryError):
        delta_upper_bound(3, 5)


def test_delta_matches_sqrt_formulas():
    for d in (2, 3, 4):
        assert delta_upper_bound(d, 2 * d).value == pytest.approx(
            math.sqrt(d), abs=1e-6)
    for d in (3, 4):
        assert delta_upper_bound(d, 2 * d + 2).value == pytest.approx(
            math.sqrt(d - 2 / 3), abs=1e-6)


def test_delta_table_flags():
    rows = {r.n: r for r in delta_table(3, 16)}
    assert rows[6].note != ""
    assert rows[10].note == "" or abs(rows[10].value - 1.438) <= 1e-3


def test_regular_circumscribed_ngon():
    for n in (4, 6, 8):
        _, ratio = regular_circumscribed_ngon(n)
        assert ratio == pytest.approx(1.0 / math.cos(math.pi / n), abs=1e-9)
    _, ratio3 = regular_circumscribed_ngon(3)
    assert ratio3 == pytest.approx(SQRT3, abs=1e-9)
    # direct geometry for odd n disagrees with the reciprocal-sine expression
    for n in (5, 7):
        _, ratio = regular_circumscribed_ngon(n)
        assert ratio == pytest.approx(
            math.cos(math.pi / (2 * n)) / math.cos(math.pi / n), abs=1e-9)
        assert ratio > 1.0
        broken = math.sin(math.pi / n) / math.cos(math.pi / (2 * n))
        assert broken < 1.0  # the printed expression cannot be a ratio


def test_circumscribed_polygon_tangency():
    poly, _ = regular_circumscribed_ngon(6)
    normals, offsets = poly.facet_normals, poly.facet_offsets
    assert np.allclose(offsets, 0.5, atol=1e-12)
