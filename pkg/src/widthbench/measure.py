"""Minimal width and diameter of convex bodies.

Polygon widths are exact: the minimal width of a polygon is attained
orthogonally to one of its edges.  For 3D polytopes the optimal direction is
either a facet normal or the common perpendicular of an edge pair, so both
candidate sets are enumerated.  Curved planar kinds fall back to a grid scan
with golden-section refinement of the width profile.
"""

import math

import numpy as np

from .bodies import (Ball, GeometryError, Polytope, ReuleauxPolygon,
                     SmoothedPolygon, angle_dir, unit, width)

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _polygon_min_width(vertices, normals, offsets):
    heights = offsets - (vertices @ normals.T).min(axis=0)
    i = int(np.argmin(heights))
    return float(heights[i]), normals[i]


def _polytope3_min_width(poly):
    verts = poly.vertices
    cands = [poly.facet_normals]
    edges = poly.edge_pairs
    if edges is not None and len(edges) >= 2:
        evec = verts[edges[:, 1]] - verts[edges[:, 0]]
        i, j = np.triu_indices(len(evec), k=1)
        cross = np.cross(evec[i], evec[j])
        norms = np.linalg.norm(cross, axis=1)
        ok = norms > 1e-12
        cands.append(cross[ok] / norms[ok, None])
    dirs = np.vstack(cands)
    proj = verts @ dirs.T
    widths = proj.max(axis=0) - proj.min(axis=0)
    k = int(np.argmin(widths))
    return float(widths[k]), dirs[k]


def _scan_min_width(body, tol=1e-9):
    thetas = np.linspace(0.0, math.pi, 720, endpoint=False)
    vals = [width(body, angle_dir(t)) for t in thetas]
    j = int(np.argmin(vals))
    lo = thetas[j] - math.pi / 720
    hi = thetas[j] + math.pi / 720

    def f(t):
        return width(body, angle_dir(t))

    a, b = lo, hi
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
    t = 0.5 * (a + b)
    return f(t), angle_dir(t)


def min_width(body):
    """Minimal width and a direction attaining it."""
    if isinstance(body, Polytope):
        if getattr(body, "degenerate", False):
            raise GeometryError("not full-dimensional")
        if body.dim == 2:
            return _polygon_min_width(body.vertices, body.facet_normals,
                                      body.facet_offsets)
        if body.dim == 3:
            return _polytope3_min_width(body)
        raise GeometryError("min_width requires dim <= 3")
    if isinstance(body, Ball):
        e = np.zeros(body.dim)
        e[0] = 1.0
        return 2.0 * body.radius, e
    if isinstance(body, ReuleauxPolygon):
        return body.width, angle_dir(body.pose)
    if isinstance(body, SmoothedPolygon):
        w, u = _polygon_min_width(body.polygon.vertices,
                                  body.polygon.facet_normals,
                                  body.polygon.facet_offsets)
        return w + 2.0 * body.radius, u
    return _scan_min_width(body)


def _max_width_scan(body, tol=1e-9):
    thetas = np.linspace(0.0, math.pi, 720, endpoint=False)
    vals = np.array([width(body, angle_dir(t)) for t in thetas])
    j = int(np.argmax(vals))
    lo, hi = thetas[j] - math.pi / 720, thetas[j] + math.pi / 720

    def f(t):
        return -width(body, angle_dir(t))

    a, b = lo, hi
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
    t = 0.5 * (a + b)
    return -f(t), angle_dir(t)


def diameter(body):
    """Diameter and an achieving point pair."""
    if isinstance(body, Polytope):
        verts = body.vertices
        g = verts @ verts.T
        sq = np.diag(g)
        d2 = sq[:, None] + sq[None, :] - 2.0 * g
        i, j = np.unravel_index(int(np.argmax(d2)), d2.shape)
        return math.sqrt(max(0.0, d2[i, j])), (verts[i], verts[j])
    if isinstance(body, Ball):
        e = np.zeros(body.dim)
        e[0] = 1.0
        return 2.0 * body.radius, (body.center - body.radius * e,
                                   body.center + body.radius * e)
    if isinstance(body, ReuleauxPolygon):
        # a corner together with the midpoint of the opposite arc
        v = body.vertices[0]
        far = v - body.width * angle_dir(body.vertex_angles[0])
        return body.width, (v, far)
    if isinstance(body, SmoothedPolygon):
        d, (p, q) = diameter(body.polygon)
        u = unit(q - p)
        return d + 2.0 * body.radius, (p - body.radius * u, q + body.radius * u)
    d, u = _max_width_scan(body)
    return d, (body.support_point(-u), body.support_point(u))


def min_width_sampled(body, resolution=10**5, refine=True):
    """Sampling-based minimal width, used as an independent cross-check.

    Scans a quasi-uniform set of directions and polishes the best one with a
    shrinking pattern search.  Works in dimensions 2 and 3.
    """
    if body.dim == 2:
        thetas = np.linspace(0.0, math.pi, resolution, endpoint=False)
        dirs = np.column_stack([np.cos(thetas), np.sin(thetas)])
    elif body.dim == 3:
        dirs = fibonacci_sphere(resolution)
    else:
        raise GeometryError("sampled width requires dim <= 3")
    if isinstance(body, Polytope):
        proj = body.vertices @ dirs.T
        vals = proj.max(axis=0) - proj.min(axis=0)
    else:
        vals = np.array([width(body, u) for u in dirs])
    j = int(np.argmin(vals))
    best_u, best = dirs[j], float(vals[j])
    if not refine:
        return best, best_u
    best, best_u = _pattern_refine(lambda u: width(body, u), best_u, best,
                                   minimize=True)
    return best, best_u


def fibonacci_sphere(n):
    """Quasi-uniform unit directions on the 2-sphere (golden-angle spiral)."""
    i = np.arange(n)
    z = 1.0 - (2.0 * i + 1.0) / n
    phi = i * math.pi * (3.0 - math.sqrt(5.0))
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])


def _tangent_basis(u):
    """Orthonormal basis of the tangent space at a unit vector."""
    d = len(u)
    m = np.eye(d) - np.outer(u, u)
    q, r = np.linalg.qr(m)
    cols = np.argsort(-np.abs(np.diag(r)))[:d - 1]
    return q[:, cols].T


def _pattern_refine(f, u0, f0, minimize=True, h0=1e-2, h_min=1e-13,
                    max_moves=400):
    """Compass search on the sphere chart at u0; deterministic."""
    sign = 1.0 if minimize else -1.0
    u, best = np.asarray(u0, float), sign * f0
    if len(u) == 2:
        steps = [np.array([1.0]), np.array([-1.0])]

        def move(u, s, h):
            th = math.atan2(u[1], u[0]) + h * s[0]
            return angle_dir(th)
    else:
        tangents = _tangent_basis(u)
        steps = []
        k = len(tangents)
        for i in range(k):
            e = np.zeros(k)
            e[i] = 1.0
            steps.extend([e, -e])
        if k == 2:
            steps.extend([np.array([1.0, 1.0]), np.array([-1.0, -1.0]),
                          np.array([1.0, -1.0]), np.array([-1.0, 1.0])])

        def move(u, s, h):
            return unit(u + h * (s @ tangents))

    h = h0
    moves = 0
    while h > h_min and moves < max_moves:
        improved = False
        for s in steps:
            cand = move(u, s, h)
            val = sign * f(cand)
            if val < best - 1e-17:
                u, best = cand, val
                improved = True
                moves += 1
                break
        if not improved:
            h *= 0.5
    return sign * best, u
