"""Intersections of slabs (strips) as polytopes.

Planar intersections clip a generous bounding box against each halfplane with
exact segment/line intersections; dimension 3 enumerates plane triples and
filters by all constraints.  Strips come in opposite-halfspace pairs, so the
intersection is bounded exactly when the strip normals span the space.
"""

import numpy as np

from .bodies import GeometryError, Polytope, unit


class Strip:
    """Slab lo <= normal . x <= hi."""

    def __init__(self, normal, lo, hi):
        self.normal = unit(normal)
        self.lo = float(lo)
        self.hi = float(hi)
        if not self.lo < self.hi:
            raise GeometryError("strip requires lo < hi")

    @property
    def width(self):
        return self.hi - self.lo

    def halfplanes(self):
        return [(self.normal, self.hi), (-self.normal, -self.lo)]

    @classmethod
    def around(cls, body, normal):
        """Minimal slab of the given direction containing a body."""
        n = unit(normal)
        return cls(n, -body.support(-n), body.support(n))


def _clip(poly_pts, n, b, eps):
    out = []
    m = len(poly_pts)
    vals = poly_pts @ n - b
    for i in range(m):
        p, q = poly_pts[i], poly_pts[(i + 1) % m]
        vp, vq = vals[i], vals[(i + 1) % m]
        if vp <= eps:
            out.append(p)
        if (vp < -eps and vq > eps) or (vp > eps and vq < -eps):
            t = vp / (vp - vq)
            out.append(p + t * (q - p))
    return np.array(out) if out else np.empty((0, 2))


def halfspace_intersection(strips):
    """Polytope cut out by a list of strips.

    Raises "unbounded" when the strip normals do not span the space and
    "empty" when the slabs have no common point.
    """
    if len(strips) == 0:
        raise GeometryError("empty strip list")
    d = len(strips[0].normal)
    if len(strips) < d:
        raise GeometryError("need at least dim strips")
    normals = np.array([s.normal for s in strips])
    if np.linalg.matrix_rank(normals, tol=1e-9) < d:
        raise GeometryError("unbounded")
    bound = np.array([max(abs(s.lo), abs(s.hi)) for s in strips])
    sigma = np.linalg.svd(normals, compute_uv=False)[-1]
    radius = 2.0 * float(np.linalg.norm(bound)) / float(sigma) + 1.0

    if d == 2:
        box = np.array([[-radius, -radius], [radius, -radius],
                        [radius, radius], [-radius, radius]])
        pts = box
        eps = 1e-12 * radius
        for s in strips:
            for n, b in s.halfplanes():
                pts = _clip(pts, n, b, eps)
                if len(pts) < 3:
                    raise GeometryError("empty")
        return Polytope(pts)

    if d == 3:
        planes = []
        for s in strips:
            planes.extend(s.halfplanes())
        N = np.array([n for n, _ in planes])
        B = np.array([b for _, b in planes])
        m = len(planes)
        cands = []
        for i in range(m):
            for j in range(i + 1, m):
                for k in range(j + 1, m):
                    A = np.array([N[i], N[j], N[k]])
                    if abs(np.linalg.det(A)) < 1e-12:
                        continue
                    x = np.linalg.solve(A, np.array([B[i], B[j], B[k]]))
                    cands.append(x)
        if not cands:
            raise GeometryError("empty")
        cands = np.array(cands)
        feas = (cands @ N.T - B[None, :]).max(axis=1) <= 1e-9
        pts = cands[feas]
        if len(pts) < 4:
            raise GeometryError("empty")
        return Polytope(pts)

    raise GeometryError("halfspace intersection limited to dim <= 3")
