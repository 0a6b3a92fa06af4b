"""Diametral chords, difference bodies, and central symmetrization.

A diametral chord is a longest chord of a body in a prescribed direction.
Its length equals the radial function of the difference body C + (-C), which
is computed exactly from facets for polytopes.  Endpoint recovery works per
kind:

* polygons: the chord-length profile over the perpendicular offset is a
  concave piecewise-linear function; it is maximized by golden section and a
  plateau of maximizers is resolved by the lexicographically smallest chord
  midpoint (the deterministic tie-break used throughout),
* 3D polytopes: a short sequence of linear programs picks the
  lexicographically smallest midpoint on the optimal face,
* balls and Reuleaux polygons: constant width makes the chord the segment
  between the two opposite support points,
* smoothed polygons: the chord is an affine diameter; the pair of boundary
  features with antiparallel normals spanning the requested direction is
  located on the normal fan and solved in closed form.
"""

import math

import numpy as np

from .bodies import (Ball, GeometryError, Polytope, ReuleauxPolygon,
                     SmoothedPolygon, angle_dir, as_vector, cross2, perp, unit)
from . import hull as _hull

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class Chord:
    """Directed segment inside a body."""

    def __init__(self, a, b):
        self.a = as_vector(a)
        self.b = as_vector(b)
        self.length = float(np.linalg.norm(self.b - self.a))
        if self.length <= 0:
            raise GeometryError("degenerate chord")
        self.direction = (self.b - self.a) / self.length

    @property
    def midpoint(self):
        return 0.5 * (self.a + self.b)

    def __repr__(self):
        return f"Chord({self.a.tolist()} -> {self.b.tolist()})"


def difference_body(poly):
    """Hull of all pairwise vertex differences; centrally symmetric."""
    if not isinstance(poly, Polytope):
        raise GeometryError("difference_body expects a polytope")
    verts = poly.vertices
    if poly.dim == 2 and len(verts) > 64:
        ring = _hull.minkowski_sum_2d(verts, -verts[::-1])
        return Polytope(ring)
    diffs = verts[:, None, :] - verts[None, :, :]
    return Polytope(diffs.reshape(-1, poly.dim))


def central_symmetrization(poly):
    """(P + (-P)) / 2, centered at the origin; preserves all widths."""
    if not isinstance(poly, Polytope):
        raise GeometryError("central_symmetrization expects a polytope")
    verts = poly.vertices
    if poly.dim == 2 and len(verts) > 64:
        ring = _hull.minkowski_sum_2d(verts, -verts[::-1])
        return Polytope(0.5 * ring)
    diffs = 0.5 * (verts[:, None, :] - verts[None, :, :])
    return Polytope(diffs.reshape(-1, poly.dim))


def chord_length(body, u):
    """Length of a longest chord of the body in direction u."""
    u = unit(u)
    if isinstance(body, (Ball, ReuleauxPolygon)):
        return 2.0 * body.radius if isinstance(body, Ball) else body.width
    if isinstance(body, SmoothedPolygon):
        return _radial_of_rounded(body.polygon.difference_body_cached(),
                                  2.0 * body.radius, u)
    if isinstance(body, Polytope):
        return _radial(body.difference_body_cached(), u)
    raise GeometryError(f"unsupported body kind {body.kind!r}")


def _radial(db, u):
    """max t with t*u inside the (origin-symmetric) polytope db."""
    if db.dim <= 3:
        du = db.facet_normals @ u
        pos = du > 1e-12
        return float(np.min(db.facet_offsets[pos] / du[pos]))
    # facet-free fallback: largest multiple of u inside the hull of db's
    # vertices, solved as a linear program over convex weights
    from scipy.optimize import linprog

    v = db.vertices
    n = len(v)
    # variables (lambda_1..n, t): sum lambda v_i - t u = 0, sum lambda = 1
    a_eq = np.vstack([np.column_stack([v.T, -u[:, None]]).reshape(db.dim, n + 1),
                      np.append(np.ones(n), 0.0)[None, :]])
    b_eq = np.append(np.zeros(db.dim), 1.0)
    c = np.append(np.zeros(n), -1.0)
    res = linprog(c, A_eq=a_eq, b_eq=b_eq,
                  bounds=[(0, None)] * n + [(None, None)], method="highs")
    if not res.success:
        raise GeometryError("radial function LP failed")
    return float(res.x[-1])


def _radial_of_rounded(db, rr, u):
    """Radial function of db + rr*disk along u (2D), via 1D root isolation."""
    from .bodies import point_to_polygon_distance

    ring = db.vertices

    def dist(t):
        return point_to_polygon_distance((t * u)[None, :], ring)[0]

    base = _radial(db, u)
    lo = base
    hi = base + rr
    # dist(t*u, db) is convex in t and increasing past the exit point, but
    # an oblique exit means the sum body can extend past base + rr
    while dist(hi) <= rr:
        hi += rr
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if dist(mid) <= rr:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def diametral_chord(body, u):
    """A longest chord of the body parallel to u (deterministic selection)."""
    u = unit(u)
    if isinstance(body, Ball):
        return Chord(body.center - body.radius * u, body.center + body.radius * u)
    if isinstance(body, ReuleauxPolygon):
        a = body.support_point(-u)
        return Chord(a, a + body.width * u)
    if isinstance(body, SmoothedPolygon):
        return _smoothed_chord(body, u)
    if isinstance(body, Polytope):
        if body.dim == 2:
            return _polygon_chord(body, u)
        if body.dim == 3:
            return _polytope3_chord(body, u)
        return _polytope_nd_chord(body, u)
    raise GeometryError(f"unsupported body kind {body.kind!r}")


# ---------------------------------------------------------------------------
# polygons: concave piecewise-linear offset profile


def _polygon_profile(poly, u):
    n = perp(u)
    N, b = poly.facet_normals, poly.facet_offsets
    du = N @ u
    dn = N @ n
    pos = du > 1e-12
    neg = du < -1e-12
    s_lo = -poly.support(-n)
    s_hi = poly.support(n)

    def t_bounds(s):
        tmax = np.min((b[pos] - s * dn[pos]) / du[pos])
        tmin = np.max((b[neg] - s * dn[neg]) / du[neg])
        return tmin, tmax

    def length(s):
        tmin, tmax = t_bounds(s)
        return tmax - tmin

    return n, s_lo, s_hi, t_bounds, length


def _golden_max(f, a, b, tol):
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
    return 0.5 * (a + b)


def _polygon_chord(poly, u):
    n, s_lo, s_hi, t_bounds, length = _polygon_profile(poly, u)
    rho = _radial(poly.difference_body_cached(), u)
    scale = max(1.0, float(np.abs(poly.vertices).max()))
    atol = 1e-11 * scale
    s_peak = _golden_max(length, s_lo, s_hi, 1e-13 * scale)

    def plateau_edge(side_lo, side_hi):
        # smallest (or largest) s with length(s) >= rho - atol
        a, b = side_lo, side_hi
        for _ in range(80):
            mid = 0.5 * (a + b)
            if length(mid) >= rho - atol:
                b = mid
            else:
                a = mid
        return b

    left = plateau_edge(s_lo, s_peak)
    # mirror for the right edge
    a, b = s_peak, s_hi
    for _ in range(80):
        mid = 0.5 * (a + b)
        if length(mid) >= rho - atol:
            a = mid
        else:
            b = mid
    right = a

    def midpoint(s):
        tmin, tmax = t_bounds(s)
        return s * n + 0.5 * (tmin + tmax) * u

    m_left, m_right = midpoint(left), midpoint(right)
    tol = 1e-11 * scale
    if m_left[0] < m_right[0] - tol:
        s_star = left
    elif m_right[0] < m_left[0] - tol:
        s_star = right
    elif m_left[1] <= m_right[1]:
        s_star = left
    else:
        s_star = right
    tmin, _ = t_bounds(s_star)
    a_pt = s_star * n + tmin * u
    return Chord(a_pt, a_pt + rho * u)


def _polygon_chord_lengths(poly, dirs):
    """Chord lengths for many directions at once (no endpoint recovery)."""
    db = poly.difference_body_cached()
    du = dirs @ db.facet_normals.T
    ratio = np.where(du > 1e-12, db.facet_offsets[None, :] / np.where(
        du > 1e-12, du, 1.0), np.inf)
    return ratio.min(axis=1)


# ---------------------------------------------------------------------------
# 3D polytopes: lexicographic LP on the optimal face


def _polytope3_chord(poly, u):
    from scipy.optimize import linprog

    rho = _radial(poly.difference_body_cached(), u)
    A, b = poly.facet_normals, poly.facet_offsets
    shift = rho * (1.0 - 1e-13) * (A @ u)
    A2 = np.vstack([A, A])
    b2 = np.concatenate([b, b - shift])
    rows = [A2]
    rhs = [b2]
    x = None
    for axis in range(3):
        c = np.zeros(3)
        c[axis] = 1.0
        res = linprog(c, A_ub=np.vstack(rows), b_ub=np.concatenate(rhs),
                      bounds=[(None, None)] * 3, method="highs")
        if not res.success:
            raise GeometryError("chord endpoint LP failed")
        x = res.x
        pin = np.zeros(3)
        pin[axis] = 1.0
        rows.append(pin[None, :])
        rhs.append(np.array([res.fun + 1e-11]))
    return Chord(x, x + rho * u)


def _polytope_nd_chord(poly, u):
    from scipy.optimize import linprog

    v = poly.vertices
    n, d = v.shape
    rho = _radial(poly.difference_body_cached(), u)
    # endpoints as convex combinations: sum mu v - sum lambda v = rho' u
    rho_s = rho * (1.0 - 1e-13)
    a_eq = np.zeros((d + 2, 2 * n))
    a_eq[:d, :n] = -v.T
    a_eq[:d, n:] = v.T
    a_eq[d, :n] = 1.0
    a_eq[d + 1, n:] = 1.0
    b_eq = np.concatenate([rho_s * u, [1.0, 1.0]])
    c = np.zeros(2 * n)
    c[:n] = v[:, 0]
    res = linprog(c, A_eq=a_eq, b_eq=b_eq,
                  bounds=[(0, None)] * (2 * n), method="highs")
    if not res.success:
        raise GeometryError("chord endpoint LP failed")
    x = res.x[:n] @ v
    return Chord(x, x + rho * u)


# ---------------------------------------------------------------------------
# smoothed polygons: affine-diameter solve on the normal fan


def _smoothed_chord(body, u):
    poly = body.polygon
    r = body.radius
    phi = np.sort(body.edge_normal_angles % (2 * math.pi))
    ring = poly.vertices
    normals, offsets = poly.facet_normals, poly.facet_offsets
    order = np.argsort(body.edge_normal_angles % (2 * math.pi))
    # vertex whose arc spans (phi[i-1], phi[i]) is the shared endpoint of
    # edges order[i-1] and order[i]
    nverts = len(ring)

    def arc_vertex(i):
        ei_prev = order[i - 1]
        # edge j runs from vertex j to j+1; the vertex between edge j and
        # edge j+1 is j+1
        return ring[(ei_prev + 1) % nverts]

    omega = math.atan2(u[1], u[0])
    brk = np.sort(np.concatenate([phi, (phi + math.pi) % (2 * math.pi)]))
    brk = np.concatenate([brk, [brk[0] + 2 * math.pi]])

    def features(theta):
        i = int(np.searchsorted(phi, theta % (2 * math.pi), side="right")) % len(phi)
        j = int(np.searchsorted(phi, (theta + math.pi) % (2 * math.pi),
                                side="right")) % len(phi)
        return arc_vertex(i), arc_vertex(j)

    two_r = 2.0 * r
    for k in range(len(brk) - 1):
        lo, hi = brk[k], brk[k + 1]
        mid = 0.5 * (lo + hi)
        va, vb = features(mid)
        q = va - vb
        c = -cross2(q, u) / two_r
        if abs(c) > 1.0:
            continue
        for theta in (omega - math.asin(c), omega - math.pi + math.asin(c)):
            for shift in (-2 * math.pi, 0.0, 2 * math.pi):
                t = theta + shift
                if lo - 1e-12 <= t <= hi + 1e-12:
                    e = angle_dir(t)
                    d = q + two_r * e
                    if d @ u > 0:
                        a_pt = vb - r * e
                        return Chord(a_pt, a_pt + float(np.linalg.norm(d)) * u)
    # root sits at a breakpoint: one endpoint lies on a flat edge
    return _smoothed_edge_contact_chord(body, u, phi, normals, offsets, order)


def _smoothed_edge_contact_chord(body, u, phi, normals, offsets, order):
    poly = body.polygon
    r = body.radius
    ring = poly.vertices
    nverts = len(ring)
    best = None
    for i, theta in enumerate(phi):
        edge_idx = order[i]
        for sgn in (1.0, -1.0):
            nhat = sgn * angle_dir(theta)
            # matching edge normal: support set is the translated edge
            matches = np.where(np.abs(normals @ nhat - 1.0) < 1e-9)[0]
            if len(matches) == 0:
                continue
            e_idx = int(matches[0])
            v0 = ring[e_idx] + r * nhat
            v1 = ring[(e_idx + 1) % nverts] + r * nhat
            y = body.support_point(-nhat)
            denom = float(u @ nhat)
            if abs(denom) < 1e-12:
                continue
            t = float((v0 - y) @ nhat) / denom
            x = y + t * u
            seg = v1 - v0
            seg_len2 = float(seg @ seg)
            tau = float((x - v0) @ seg) / seg_len2
            if -1e-9 <= tau <= 1.0 + 1e-9:
                cand = Chord(y, x) if t > 0 else Chord(x, y)
                if best is None or cand.length > best.length:
                    best = cand
    if best is None:
        raise GeometryError("affine diameter not found")
    return best


def diametral_chord_oracle(body, u, tol=1e-10):
    """Independent chord computation by golden section over the offset.

    Maximizes the chord-length profile directly from the membership oracle.
    Slow; used to cross-check the closed-form paths.
    """
    u = unit(u)
    n = perp(u)
    s_lo = -body.support(-n)
    s_hi = body.support(n)

    def interval(s):
        # t-range of {t : s n + t u inside body} by bisection on membership
        t_lo_out = -body.support(-u) - 1.0
        t_hi_out = body.support(u) + 1.0
        mid_t = None
        # find an inside point by sampling
        ts = np.linspace(t_lo_out, t_hi_out, 65)
        for t in ts:
            if body.contains(s * n + t * u, slack=0.0):
                mid_t = t
                break
        if mid_t is None:
            return 0.0, (None, None)
        lo, hi = t_lo_out, mid_t
        for _ in range(60):
            m = 0.5 * (lo + hi)
            if body.contains(s * n + m * u, slack=0.0):
                hi = m
            else:
                lo = m
        t0 = hi
        lo, hi = mid_t, t_hi_out
        for _ in range(60):
            m = 0.5 * (lo + hi)
            if body.contains(s * n + m * u, slack=0.0):
                lo = m
            else:
                hi = m
        t1 = lo
        return t1 - t0, (t0, t1)

    def length(s):
        return interval(s)[0]

    s_star = _golden_max(length, s_lo, s_hi, tol)
    _, (t0, t1) = interval(s_star)
    a = s_star * n + t0 * u
    b = s_star * n + t1 * u
    return Chord(a, b)


def _point_segment_distance(p, a, b):
    e = b - a
    ee = float(e @ e)
    if ee == 0.0:
        return float(np.linalg.norm(p - a))
    t = min(1.0, max(0.0, float((p - a) @ e) / ee))
    return float(np.linalg.norm(p - (a + t * e)))


def segments_intersect(c1, c2, tol=1e-9):
    """Whether two chords intersect as closed segments, with slack tol.

    True when the segments properly cross, or when they come within tol of
    each other (which covers endpoint contact computed in floating point).
    """
    p, r = c1.a, c1.b - c1.a
    q, s = c2.a, c2.b - c2.a
    denom = cross2(r, s)
    scale = max(np.linalg.norm(r), np.linalg.norm(s), 1.0)
    if abs(denom) > 1e-14 * scale * scale:
        t = cross2(q - p, s) / denom
        w = cross2(q - p, r) / denom
        if 0.0 <= t <= 1.0 and 0.0 <= w <= 1.0:
            return True
    # non-crossing segments realize their minimum distance at an endpoint
    gap = min(_point_segment_distance(c1.a, c2.a, c2.b),
              _point_segment_distance(c1.b, c2.a, c2.b),
              _point_segment_distance(c2.a, c1.a, c1.b),
              _point_segment_distance(c2.b, c1.a, c1.b))
    return gap <= tol


def intersection_point(c1, c2):
    """Intersection point of the lines carrying two non-parallel chords."""
    p, r = c1.a, c1.b - c1.a
    q, s = c2.a, c2.b - c2.a
    denom = cross2(r, s)
    if abs(denom) < 1e-15:
        raise GeometryError("parallel chords")
    t = cross2(q - p, s) / denom
    return p + t * r
