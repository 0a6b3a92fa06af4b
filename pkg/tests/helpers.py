"""Shared random-body generators for the test suite."""

import numpy as np

from widthbench.bodies import GeometryError, Polytope, SmoothedPolygon
from widthbench.measure import min_width


def random_polygon(rng, n_points=10, scale=1.0, min_verts=4):
    """Full-dimensional random convex polygon with a reasonable width."""
    while True:
        stretch = np.array([1.0, rng.uniform(0.4, 1.0)])
        pts = rng.standard_normal((n_points, 2)) * stretch * scale
        try:
            poly = Polytope(pts)
        except GeometryError:
            continue
        if len(poly.vertices) >= min_verts and min_width(poly)[0] > 0.3 * scale:
            return poly


def random_polytope3(rng, n_points=12, scale=1.0):
    while True:
        pts = rng.standard_normal((n_points, 3)) * scale
        try:
            poly = Polytope(pts)
        except GeometryError:
            continue
        if min_width(poly)[0] > 0.3 * scale:
            return poly


def random_smoothed_body(rng, n_points=9, scale=1.0):
    poly = random_polygon(rng, n_points=n_points, scale=scale)
    return SmoothedPolygon(poly, rng.uniform(0.1, 0.3) * scale)


def random_directions(rng, n, dim):
    u = rng.standard_normal((n, dim))
    return u / np.linalg.norm(u, axis=1, keepdims=True)
