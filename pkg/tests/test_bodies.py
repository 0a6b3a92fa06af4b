import math

import numpy as np
import pytest

from widthbench.bodies import (Ball, GeometryError, Polytope, ReuleauxPolygon,
                               SmoothedPolygon, convex_hull, disk,
                               point_to_polygon_distance, support, width)
from widthbench.bodyspec import body_to_json, parse_body

from helpers import random_directions

UNIT_SQUARE = [[-0.5, -0.5], [0.5, -0.5], [0.5, 0.5], [-0.5, 0.5]]


def test_support_unit_square():
    sq = Polytope(UNIT_SQUARE)
    assert support(sq, [1, 0]) == pytest.approx(0.5, abs=1e-15)


def test_support_ball_any_direction():
    b = Ball([0.3, -0.2], 0.5)
    rng = np.random.default_rng(0)
    for u in random_directions(rng, 20, 2):
        assert b.support(u) == pytest.approx(float(b.center @ u) + 0.5)


def test_reuleaux_constant_width_100_directions():
    r = ReuleauxPolygon(3, 1.0)
    rng = np.random.default_rng(1)
    for u in random_directions(rng, 100, 2):
        assert r.support(u) + r.support(-u) == pytest.approx(1.0, abs=1e-9)


def test_width_examples():
    sq = Polytope(UNIT_SQUARE)
    assert width(sq, [1, 1]) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert width(sq, [1, 0]) == pytest.approx(1.0, abs=1e-12)
    r = ReuleauxPolygon(3, 1.0, pose=0.37)
    rng = np.random.default_rng(2)
    for u in random_directions(rng, 25, 2):
        assert width(r, u) == pytest.approx(1.0, abs=1e-9)


def test_support_sublinearity_sampled():
    """H(u+v) <= H(u) + H(v) for the homogeneous extension of the support."""
    bodies = [Polytope(UNIT_SQUARE), disk(1.0), ReuleauxPolygon(5, 1.0),
              SmoothedPolygon(Polytope([[0, 0], [1, 0], [0.3, 0.8]]), 0.2)]
    rng = np.random.default_rng(3)
    for body in bodies:
        for _ in range(50):
            u = rng.standard_normal(2)
            v = rng.standard_normal(2)
            s = u + v
            if np.linalg.norm(s) < 1e-9:
                continue
            h = (np.linalg.norm(s) * body.support(s / np.linalg.norm(s)))
            hu = np.linalg.norm(u) * body.support(u / np.linalg.norm(u))
            hv = np.linalg.norm(v) * body.support(v / np.linalg.norm(v))
            assert h <= hu + hv + 1e-9


def test_reuleaux_membership_matches_disks():
    r = ReuleauxPolygon(5, 1.0, center=[0.1, 0.2], pose=0.3)
    rng = np.random.default_rng(4)
    pts = rng.uniform(-1.2, 1.4, size=(300, 2))
    for p in pts:
        in_disks = bool(np.max(np.linalg.norm(r.vertices - p, axis=1)) <= 1.0)
        assert r.contains(p, 0.0) == in_disks


def test_reuleaux_bad_order_rejected():
    with pytest.raises(GeometryError):
        ReuleauxPolygon(4, 1.0)
    with pytest.raises(GeometryError):
        ReuleauxPolygon(1, 1.0)


def test_polytope_degenerate_rejected():
    with pytest.raises(GeometryError, match="not full-dimensional"):
        Polytope([[0, 0], [1, 0], [2, 0]])
    with pytest.raises(GeometryError, match="not full-dimensional"):
        convex_hull([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]])


def test_point_to_polygon_distance():
    ring = np.array(UNIT_SQUARE)
    pts = np.array([[0.0, 0.0], [1.5, 0.0], [0.5, 0.5], [-2.0, -0.5]])
    d = point_to_polygon_distance(pts, ring)
    assert d[0] == 0.0
    assert d[1] == pytest.approx(1.0)
    assert d[2] == 0.0
    assert d[3] == pytest.approx(1.5)


def test_smoothed_polygon_support_is_offset():
    poly = Polytope([[0, 0], [2, 0], [1, 1.5]])
    s = SmoothedPolygon(poly, 0.25)
    rng = np.random.default_rng(5)
    for u in random_directions(rng, 30, 2):
        assert s.support(u) == pytest.approx(poly.support(u) + 0.25, abs=1e-12)
        assert s.contains(s.support_point(u), 1e-9)


def test_bodyspec_roundtrip():
    specs = [
        {"kind": "ball", "dim": 2, "width": 1.0, "center": [0, 0]},
        {"kind": "reuleaux", "order": 3, "width": 1.0, "center": [0, 0],
         "pose": 0.0},
        {"kind": "polygon", "vertices": UNIT_SQUARE},
        {"kind": "polytope", "vertices": np.vstack([np.eye(3),
                                                    -np.eye(3)]).tolist()},
    ]
    for spec in specs:
        body = parse_body(spec)
        again = parse_body(body_to_json(body))
        assert again.kind == body.kind
        assert again.dim == body.dim


def test_bodyspec_diagnostics():
    with pytest.raises(GeometryError, match="width must be positive"):
        parse_body({"kind": "ball", "dim": 2, "width": -1, "center": [0, 0]})
    with pytest.raises(GeometryError, match="order must be odd"):
        parse_body({"kind": "reuleaux", "order": 4, "width": 1})
    with pytest.raises(GeometryError, match="not full-dimensional"):
        parse_body({"kind": "polygon", "vertices": [[0, 0], [1, 1], [2, 2]]})
    with pytest.raises(GeometryError, match="unknown body kind"):
        parse_body({"kind": "torus"})
