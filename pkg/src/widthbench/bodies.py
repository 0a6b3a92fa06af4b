"""Convex body representations and their exact support functions.

Every body kind answers ``support(u)`` (the largest projection onto a unit
direction ``u``), exact membership with a small absolute slack, and boundary
sampling in the plane.  Polytopes are the universal output type of the
construction operations; the curved kinds (ball, Reuleaux polygon, smoothed
polygon) are represented analytically and only discretized on demand.
"""

import math

import numpy as np

from . import hull as _hull

CONTAINS_SLACK = 1e-9

TWO_PI = 2.0 * math.pi


class GeometryError(ValueError):
    """An input violates a geometric precondition."""


def as_vector(x):
    return np.asarray(x, dtype=float)


def unit(v):
    v = as_vector(v)
    n = np.linalg.norm(v)
    if n < 1e-15 or not np.isfinite(n):
        raise GeometryError("zero or non-finite direction")
    return v / n


def perp(u):
    """Rotate a planar vector by +90 degrees."""
    return np.array([-u[1], u[0]])


def cross2(a, b):
    """Scalar cross product of planar vectors."""
    return float(a[0] * b[1] - a[1] * b[0])


def angle_dir(theta):
    return np.array([math.cos(theta), math.sin(theta)])


def rotation_2d(theta):
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


class ConvexBody:
    """Base for all body kinds; subclasses set ``kind`` and ``dim``."""

    kind = "abstract"

    def support(self, u):
        raise NotImplementedError

    def contains(self, p, slack=CONTAINS_SLACK):
        raise NotImplementedError

    def boundary_points(self, n):
        raise NotImplementedError

    def scaled(self, factor):
        raise NotImplementedError


class Polytope(ConvexBody):
    """Convex polytope given by its extreme points.

    The constructor canonicalizes the input (hull of the given points) and
    derives the facet structure for dim <= 3.  Degenerate vertex sets are
    rejected unless ``degenerate_ok`` is passed, which a few operations use
    for inputs like segments.
    """

    kind = "polytope"

    def __init__(self, vertices, degenerate_ok=False):
        pts = np.atleast_2d(as_vector(vertices))
        if not np.isfinite(pts).all():
            raise GeometryError("non-finite vertex coordinates")
        self.dim = pts.shape[1]
        self._edges = None
        self._normals = None
        self._offsets = None
        self._diff = None
        if self.dim < 2:
            raise GeometryError("dimension must be at least 2")
        try:
            if self.dim == 2:
                self.vertices = _hull.hull_ring_2d(pts)
            else:
                verts, normals, offsets, edges = _hull.hull_nd(pts)
                self.vertices = verts
                self._normals, self._offsets, self._edges = normals, offsets, edges
        except _hull.DegenerateInputError:
            if not degenerate_ok:
                raise GeometryError("not full-dimensional") from None
            self.vertices = np.unique(np.round(pts, 12), axis=0)
            self.degenerate = True
            return
        self.degenerate = False

    @property
    def facet_normals(self):
        self._ensure_facets()
        return self._normals

    @property
    def facet_offsets(self):
        self._ensure_facets()
        return self._offsets

    @property
    def edge_pairs(self):
        """Index pairs of hull edges (dim 3 only; triangulation superset)."""
        self._ensure_facets()
        return self._edges

    def _ensure_facets(self):
        if self._normals is None:
            if self.degenerate:
                raise GeometryError("not full-dimensional")
            if self.dim == 2:
                self._normals, self._offsets = _hull.facets_2d(self.vertices)
            elif self.dim > 3:
                raise GeometryError("facet enumeration limited to dim <= 3")

    def support(self, u):
        return float(np.max(self.vertices @ u))

    def support_point(self, u):
        return self.vertices[int(np.argmax(self.vertices @ u))]

    def contains(self, p, slack=CONTAINS_SLACK):
        return bool(np.max(self.facet_normals @ as_vector(p) - self.facet_offsets) <= slack)

    def boundary_points(self, n):
        if self.dim != 2:
            raise GeometryError("boundary sampling is planar only")
        ring = self.vertices
        out = []
        per = np.roll(ring, -1, axis=0) - ring
        lens = np.linalg.norm(per, axis=1)
        total = lens.sum()
        for v, e, L in zip(ring, per, lens):
            m = max(1, int(round(n * L / total)))
            ts = np.arange(m) / m
            out.append(v + ts[:, None] * e)
        return np.vstack(out)

    def scaled(self, factor):
        return Polytope(self.vertices * factor)

    def translated(self, shift):
        return Polytope(self.vertices + as_vector(shift))

    def difference_body_cached(self):
        from .chords import difference_body

        if self._diff is None:
            self._diff = difference_body(self)
        return self._diff


class CompletionBody(Polytope):
    """Discretized boundary polygon produced by constant-width completion."""

    kind = "completion"


class Ball(ConvexBody):
    kind = "ball"

    def __init__(self, center, radius):
        self.center = as_vector(center)
        self.radius = float(radius)
        if self.radius <= 0 or not np.isfinite(self.radius):
            raise GeometryError("ball radius must be positive")
        self.dim = len(self.center)

    def support(self, u):
        return float(self.center @ u) + self.radius

    def support_point(self, u):
        return self.center + self.radius * as_vector(u)

    def contains(self, p, slack=CONTAINS_SLACK):
        return np.linalg.norm(as_vector(p) - self.center) <= self.radius + slack

    def boundary_points(self, n):
        if self.dim != 2:
            raise GeometryError("boundary sampling is planar only")
        th = np.linspace(0.0, TWO_PI, n, endpoint=False)
        return self.center + self.radius * np.column_stack([np.cos(th), np.sin(th)])

    def scaled(self, factor):
        return Ball(self.center * factor, self.radius * factor)


def disk(width=1.0, center=(0.0, 0.0)):
    """Planar disk of the given minimal width (diameter)."""
    return Ball(center, width / 2.0)


class ReuleauxPolygon(ConvexBody):
    """Regular Reuleaux polygon of odd order m and constant width w.

    The body is the intersection of the m disks of radius w centered at the
    vertices of a regular m-gon with circumradius w / (2 cos(pi/2m)).  Its
    support function is evaluated exactly from the arc/corner normal fan.
    """

    kind = "reuleaux"
    dim = 2

    def __init__(self, order, width, center=(0.0, 0.0), pose=0.0):
        order = int(order)
        if order < 3 or order % 2 == 0:
            raise GeometryError("reuleaux order must be odd and >= 3")
        if width <= 0:
            raise GeometryError("reuleaux width must be positive")
        self.order = order
        self.width = float(width)
        self.center = as_vector(center)
        self.pose = float(pose)
        self.circumradius = self.width / (2.0 * math.cos(math.pi / (2 * order)))
        self.vertex_angles = self.pose + TWO_PI * np.arange(order) / order
        self.vertices = self.center + self.circumradius * np.column_stack(
            [np.cos(self.vertex_angles), np.sin(self.vertex_angles)])

    def _corner_gap(self, phi):
        """Angular distance from phi to the nearest vertex direction."""
        rel = (phi - self.pose) % (TWO_PI / self.order)
        return min(rel, TWO_PI / self.order - rel)

    def support(self, u):
        u = as_vector(u)
        phi = math.atan2(u[1], u[0])
        dots = self.vertices @ u
        if self._corner_gap(phi) <= math.pi / (2 * self.order):
            return float(np.max(dots))
        return float(np.min(dots)) + self.width

    def support_point(self, u):
        u = as_vector(u)
        phi = math.atan2(u[1], u[0])
        dots = self.vertices @ u
        if self._corner_gap(phi) <= math.pi / (2 * self.order):
            return self.vertices[int(np.argmax(dots))]
        return self.vertices[int(np.argmin(dots))] + self.width * u

    def contains(self, p, slack=CONTAINS_SLACK):
        d = np.linalg.norm(self.vertices - as_vector(p), axis=1)
        return bool(np.max(d) <= self.width + slack)

    def boundary_points(self, n):
        th = np.linspace(0.0, TWO_PI, n, endpoint=False)
        return np.array([self.support_point(angle_dir(t)) for t in th])

    def discretize(self, n=4096):
        return Polytope(self.boundary_points(n))

    def scaled(self, factor):
        return ReuleauxPolygon(self.order, self.width * factor,
                               self.center * factor, self.pose)


class SmoothedPolygon(ConvexBody):
    """Minkowski sum of a convex polygon with a disk of radius r.

    Used as the stock of smooth test bodies: corners are rounded into arcs
    while the support function stays exact (polygon support plus r).
    """

    kind = "smoothed"
    dim = 2

    def __init__(self, polygon, radius):
        if isinstance(polygon, Polytope):
            self.polygon = polygon
        else:
            self.polygon = Polytope(polygon)
        if self.polygon.dim != 2:
            raise GeometryError("smoothed bodies are planar only")
        self.radius = float(radius)
        if self.radius <= 0:
            raise GeometryError("smoothing radius must be positive")
        normals, offsets = self.polygon.facet_normals, self.polygon.facet_offsets
        self.edge_normal_angles = np.arctan2(normals[:, 1], normals[:, 0])
        self.edge_offsets = offsets

    def support(self, u):
        return self.polygon.support(u) + self.radius

    def support_point(self, u):
        return self.polygon.support_point(u) + self.radius * as_vector(u)

    def contains(self, p, slack=CONTAINS_SLACK):
        d = point_to_polygon_distance(as_vector(p)[None, :], self.polygon.vertices)[0]
        return bool(d <= self.radius + slack)

    def boundary_points(self, n):
        th = np.linspace(0.0, TWO_PI, n, endpoint=False)
        return np.array([self.support_point(angle_dir(t)) for t in th])

    def scaled(self, factor):
        return SmoothedPolygon(self.polygon.scaled(factor), self.radius * factor)


def point_to_polygon_distance(points, ring):
    """Euclidean distance of each point to a convex ccw polygon (0 inside).

    The ring may contain repeated consecutive points (e.g. raw boundary
    samples); zero-length edges are skipped.
    """
    points = np.atleast_2d(points)
    ring = np.asarray(ring, float)
    e_all = np.roll(ring, -1, axis=0) - ring
    keep = np.einsum("ij,ij->i", e_all, e_all) > 0.0
    a = ring[keep]
    e = e_all[keep]
    ee = np.einsum("ij,ij->i", e, e)
    # projection parameter of every point on every edge
    diff = points[:, None, :] - a[None, :, :]
    t = np.clip(np.einsum("pij,ij->pi", diff, e) / ee[None, :], 0.0, 1.0)
    closest = a[None, :, :] + t[:, :, None] * e[None, :, :]
    d = np.linalg.norm(points[:, None, :] - closest, axis=2).min(axis=1)
    lens = np.sqrt(ee)
    normals = np.column_stack([e[:, 1], -e[:, 0]]) / lens[:, None]
    offsets = np.einsum("ij,ij->i", normals, a)
    inside = (points @ normals.T - offsets[None, :]).max(axis=1) <= 0.0
    d[inside] = 0.0
    return d


def convex_hull(points):
    """Polytope spanned by a point set; rejects flat input."""
    pts = np.atleast_2d(as_vector(points))
    if pts.shape[0] < pts.shape[1] + 1:
        raise GeometryError("not full-dimensional")
    return Polytope(pts)


def support(body, u):
    """Largest projection of the body onto the unit direction u."""
    return body.support(unit(u))


def width(body, u):
    """Width of the smallest slab orthogonal to u that contains the body."""
    u = unit(u)
    return body.support(u) + body.support(-u)
