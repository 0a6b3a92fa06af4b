import json
import math

import numpy as np
import pytest

from widthbench.bodies import GeometryError
from widthbench.linefamilies import (ICOSAHEDRAL_RADIUS, LineFamily,
                                     covering_radius, icosahedral_family,
                                     literature_bounds_3d, optimize_family,
                                     orthogonal_axes, planar_family,
                                     plus_one_family, random_rotation)

DEG = 180.0 / math.pi


def test_planar_families_exact():
    for m in range(2, 17):
        fam = planar_family(m)
        assert fam.certified_radius == pytest.approx(math.pi / (2 * m))
        assert covering_radius(fam, 10**4) == pytest.approx(
            math.pi / (2 * m), abs=1e-6)
    with pytest.raises(GeometryError):
        planar_family(1)


def test_planar_small_cases():
    f2 = planar_family(2)
    assert math.degrees(f2.certified_radius) == pytest.approx(45.0)
    assert math.degrees(planar_family(3).certified_radius) == pytest.approx(30.0)
    assert planar_family(5).certified_radius == pytest.approx(math.pi / 10)


def test_orthogonal_axes():
    assert math.degrees(orthogonal_axes(2).certified_radius) == pytest.approx(45.0)
    a33 = orthogonal_axes(3).certified_radius
    assert math.degrees(a33) == pytest.approx(54.7356, abs=1e-3)
    assert covering_radius(orthogonal_axes(3), 10**5) == pytest.approx(
        a33, abs=math.radians(1e-3))
    assert math.degrees(orthogonal_axes(4).certified_radius) == pytest.approx(60.0)


def test_plus_one_family():
    p3 = plus_one_family(3)
    assert len(p3) == 4
    assert math.degrees(p3.certified_radius) == pytest.approx(49.1066, abs=1e-3)
    assert covering_radius(p3, 10**5) == pytest.approx(
        p3.certified_radius, abs=math.radians(1e-3))
    p4 = plus_one_family(4)
    assert len(p4) == 5
    assert p4.certified_radius == pytest.approx(math.acos(math.sqrt(3 / 10)))
    with pytest.raises(GeometryError):
        plus_one_family(2)


def test_icosahedral_family():
    fam = icosahedral_family()
    assert len(fam) == 6
    cr = covering_radius(fam, 10**5)
    assert math.degrees(cr) == pytest.approx(37.3774, abs=1e-2)
    assert cr == pytest.approx(ICOSAHEDRAL_RADIUS, abs=1e-7)
    assert math.cos(cr) == pytest.approx(math.tan(math.pi / 5) ** -1
                                         / math.sqrt(3), abs=1e-6)
    dots = np.abs(fam.lines @ fam.lines.T)
    off = dots[~np.eye(6, dtype=bool)]
    assert np.degrees(np.arccos(off)) == pytest.approx(
        math.degrees(math.acos(1 / math.sqrt(5))), abs=1e-9)


def test_single_line_covering_radius():
    fam = LineFamily(2, [[1.0, 0.0]])
    assert covering_radius(fam, 10**4) == pytest.approx(math.pi / 2, abs=1e-6)


def test_certified_radius_consistency():
    for fam in (planar_family(4), orthogonal_axes(3), plus_one_family(3),
                icosahedral_family()):
        cr = covering_radius(fam, 10**5)
        assert cr <= fam.certified_radius + 1e-6
        assert cr >= fam.certified_radius - 1e-4


def test_monotone_in_family_size():
    rng = np.random.default_rng(0)
    base = orthogonal_axes(3)
    extra = rng.standard_normal(3)
    bigger = base.extended(extra / np.linalg.norm(extra))
    assert covering_radius(bigger, 10**4) <= covering_radius(base, 10**4) + 1e-9


def test_rotation_invariance():
    rng = np.random.default_rng(1)
    for fam in (icosahedral_family(), plus_one_family(3)):
        rot = random_rotation(3, rng)
        c1 = covering_radius(fam, 10**5)
        c2 = covering_radius(fam.rotated(rot), 10**5)
        assert abs(c1 - c2) <= 1e-9
    fam = planar_family(5)
    rot = random_rotation(2, rng)
    assert abs(covering_radius(fam, 10**4)
               - covering_radius(fam.rotated(rot), 10**4)) <= 1e-9


def test_duplicate_lines_rejected():
    with pytest.raises(GeometryError):
        LineFamily(2, [[1, 0], [-1, 0]])


def test_literature_table():
    table = dict(literature_bounds_3d())
    assert table[5] == pytest.approx(45.9243)
    assert table[7] == pytest.approx(36.2060)
    assert table[8] == pytest.approx(33.5473)
    assert len(table) == 6


def test_json_roundtrip(tmp_path):
    fam = plus_one_family(3)
    path = tmp_path / "family.json"
    fam.save(path)
    data = json.loads(path.read_text())
    assert set(data) == {"dim", "lines", "radius_rad", "certified"}
    assert data["certified"] is True
    back = LineFamily.load(path)
    assert back.dim == 3
    assert np.allclose(back.lines, fam.lines)
    assert back.certified_radius == pytest.approx(fam.certified_radius)


def test_optimizer_planar_reaches_known_optimum():
    fam = optimize_family(2, 3, seed=1, iters=120)
    assert fam.certified_radius <= math.pi / 6 + 1e-3


def test_optimizer_not_worse_than_baseline():
    fam = optimize_family(3, 4, seed=1, iters=60)
    assert fam.certified_radius <= plus_one_family(3).certified_radius + 1e-9


def test_optimizer_k5_approaches_literature():
    fam = optimize_family(3, 5, seed=1, iters=300)
    assert math.degrees(fam.certified_radius) <= 46.5


def test_covering_radius_resolution_precondition():
    with pytest.raises(GeometryError):
        covering_radius(planar_family(3), 100)
