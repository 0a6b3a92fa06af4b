"""Convex hull construction on raw coordinate arrays.

2D hulls use a monotone chain with a scale-relative orientation predicate and
return a counterclockwise ring of extreme points.  Hulls in dimension 3 and
above are delegated to Qhull via scipy; coplanar output facets are merged so
facet counts reflect true faces, not triangulation simplices.
"""

import numpy as np


class DegenerateInputError(ValueError):
    pass


def _orient(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _point_segment_dist(p, a, b):
    e = b - a
    ee = float(e @ e)
    if ee == 0.0:
        return float(np.linalg.norm(p - a))
    t = min(1.0, max(0.0, float((p - a) @ e) / ee))
    return float(np.linalg.norm(p - (a + t * e)))


def hull_ring_2d(points, eps_rel=1e-12):
    """Counterclockwise ring of extreme points (collinear points dropped).

    The chains use a strict orientation predicate; a vertex is pruned
    afterwards only if it lies within tolerance of the segment joining its
    neighbors, which is the sliver-safe collinearity test.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("expected an (n, 2) array")
    scale = max(1.0, float(np.abs(pts).max()))
    tol = eps_rel * scale
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]
    keep = [0]
    for i in range(1, len(pts)):
        if np.abs(pts[i] - pts[keep[-1]]).max() > tol:
            keep.append(i)
    pts = pts[keep]
    if len(pts) < 3:
        raise DegenerateInputError("not full-dimensional")

    def chain(seq):
        out = []
        for p in seq:
            while len(out) > 1 and _orient(out[-2], out[-1], p) <= 0.0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(pts[::-1])
    ring = lower[:-1] + upper[:-1]
    if len(ring) < 3:
        raise DegenerateInputError("not full-dimensional")

    # prune vertices that sit on the segment joining their neighbors
    changed = True
    while changed and len(ring) > 3:
        changed = False
        for i in range(len(ring)):
            prev_v = ring[(i - 1) % len(ring)]
            next_v = ring[(i + 1) % len(ring)]
            if _point_segment_dist(ring[i], prev_v, next_v) <= tol:
                del ring[i]
                changed = True
                break
    ring = np.array(ring)
    if len(ring) < 3 or abs(_ring_area(ring)) <= tol * scale:
        raise DegenerateInputError("not full-dimensional")
    return ring


def _ring_area(ring):
    x, y = ring[:, 0], ring[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def facets_2d(ring):
    """Outward unit normals and offsets for a counterclockwise vertex ring."""
    edges = np.roll(ring, -1, axis=0) - ring
    lengths = np.linalg.norm(edges, axis=1)
    normals = np.column_stack([edges[:, 1], -edges[:, 0]]) / lengths[:, None]
    offsets = np.einsum("ij,ij->i", normals, ring)
    return normals, offsets


def hull_nd(points):
    """Qhull hull for dim >= 3: (vertices, normals, offsets, edge index pairs).

    Normals/offsets are merged over coplanar simplices.  For dim > 3 only the
    extreme points are returned (facet structure is not derived).
    """
    from scipy.spatial import ConvexHull

    pts = np.asarray(points, dtype=float)
    d = pts.shape[1]
    try:
        h = ConvexHull(pts)
    except Exception as exc:  # qhull reports flat input as an error
        raise DegenerateInputError("not full-dimensional") from exc
    verts = pts[h.vertices]
    if d > 3:
        return verts, None, None, None
    # h.equations rows are (normal, -offset) with outward normals
    normals = h.equations[:, :3]
    offsets = -h.equations[:, 3]
    scale = max(1.0, float(np.abs(pts).max()))
    key = np.round(np.column_stack([normals, offsets / scale]), 9)
    _, idx = np.unique(key, axis=0, return_index=True)
    normals, offsets = normals[idx], offsets[idx]

    # edge set from the triangulation (a superset of the true edge graph,
    # expressed in hull-vertex indexing)
    remap = -np.ones(len(pts), dtype=int)
    remap[h.vertices] = np.arange(len(h.vertices))
    pairs = set()
    for simplex in h.simplices:
        s = remap[simplex]
        for i in range(len(s)):
            for j in range(i + 1, len(s)):
                pairs.add((min(s[i], s[j]), max(s[i], s[j])))
    edges = np.array(sorted(pairs), dtype=int)
    return verts, normals, offsets, edges


def minkowski_sum_2d(ring_a, ring_b):
    """Minkowski sum of two convex ccw rings by edge-angle merge."""

    def edges_of(ring):
        e = np.roll(ring, -1, axis=0) - ring
        ang = np.arctan2(e[:, 1], e[:, 0])
        start = int(np.argmin(ang))
        return np.roll(e, -start, axis=0), np.roll(ang, -start), ring[start]

    ea, aa, pa = edges_of(np.asarray(ring_a, float))
    eb, ab, pb = edges_of(np.asarray(ring_b, float))
    i = j = 0
    merged = []
    while i < len(ea) or j < len(eb):
        if j >= len(eb) or (i < len(ea) and aa[i] <= ab[j]):
            merged.append(ea[i])
            i += 1
        else:
            merged.append(eb[j])
            j += 1
    pts = (pa + pb) + np.cumsum(np.vstack([[0.0, 0.0]] + merged[:-1]), axis=0)
    return hull_ring_2d(pts)
