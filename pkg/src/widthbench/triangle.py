"""Inscribed regular triangles of guaranteed minimal width.

Scanning directions until the diametral chord is cut into equal halves by
its perpendicular diametral chord yields a quadrilateral frame Q whose
vertices are chord endpoints.  The largest regular triangle with one side
parallel to the balanced chord inscribed in Q has minimal width at least
(3 - sqrt(3))/2 times the body's minimal width.  Both apex orientations are
tried; the triangle is found exactly by a three-variable linear program.
"""

import math
from dataclasses import dataclass

import numpy as np

from .bodies import GeometryError, angle_dir, convex_hull, perp, unit
from .chords import diametral_chord, intersection_point
from .measure import min_width

WIDTH_FLOOR = 0.5 * (3.0 - math.sqrt(3.0))


@dataclass
class QuadFrame:
    """Balanced pair of perpendicular diametral chords.

    ``a``/``c`` bound the balanced chord, ``cross`` is its intersection with
    the perpendicular chord from ``near_end`` to ``far_end`` (labeled so the
    crossing is nearer to ``near_end``), and ``split`` in [0, 1/2] is the
    crossing position along the perpendicular chord.
    """

    direction: float  # balanced direction, radians
    a: np.ndarray
    cross: np.ndarray
    c: np.ndarray
    near_end: np.ndarray
    far_end: np.ndarray
    split: float

    def quad(self):
        return convex_hull([self.a, self.c, self.near_end, self.far_end])


def _chord_pair(body, delta):
    u = angle_dir(delta)
    c1 = diametral_chord(body, u)
    c2 = diametral_chord(body, perp(u))
    return c1, c2


def _imbalance(c1, c2):
    b = intersection_point(c1, c2)
    return float(np.linalg.norm(c1.a - b) - np.linalg.norm(b - c1.b)), b


def balanced_chord_direction(body, samples=720, max_samples=10**4):
    """Find a direction whose diametral chord is bisected by its perpendicular.

    The imbalance g flips sign under a half-turn, so a continuous chord map
    admits a balanced direction.  Sign changes of g over the scan are
    bisected; a bracket that collapses onto a jump means the chord map is
    discontinuous there and the next finer scan is tried before giving up.
    """
    w = min_width(body)[0]
    tol = 1e-9 * w

    cache = {}

    def g(delta):
        if delta not in cache:
            c1, c2 = _chord_pair(body, delta)
            cache[delta] = (_imbalance(c1, c2), (c1, c2))
        return cache[delta]

    def bisect(lo, hi, glo):
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            (gm, _), _ = g(mid)
            if abs(gm) <= tol:
                return mid
            if glo * gm < 0:
                hi = mid
            else:
                lo, glo = mid, gm
        return None  # bracket collapsed on a chord discontinuity

    for ns in (samples, max_samples):
        deltas = np.linspace(0.0, math.pi, ns + 1)
        (g0, _), _ = g(deltas[0])
        if abs(g0) <= tol:
            return _build_frame(body, deltas[0], *g(deltas[0])[1])
        prev = g0
        for i in range(1, ns + 1):
            if i < ns:
                (cur, _), _ = g(deltas[i])
                if abs(cur) <= tol:
                    return _build_frame(body, deltas[i], *g(deltas[i])[1])
            else:
                cur = -g0  # reversing the direction swaps the endpoints
            if prev * cur < 0:
                root = bisect(deltas[i - 1], deltas[i], prev)
                if root is not None:
                    return _build_frame(body, root, *g(root)[1])
            prev = cur
    raise GeometryError(
        "balanced direction not found (non-reduced degenerate body)")


def _build_frame(body, delta, c1, c2):
    b = intersection_point(c1, c2)
    p, r = c2.a, c2.b
    if np.linalg.norm(p - b) > np.linalg.norm(r - b):
        p, r = r, p
    pr = float(np.linalg.norm(r - p))
    split = float(np.clip(np.linalg.norm(p - b) / pr, 0.0, 0.5))
    return QuadFrame(direction=delta, a=c1.a, cross=b, c=c1.b,
                     near_end=p, far_end=r, split=split)


def _largest_triangle_lp(quad, base_dir, apex_dir):
    """Max side of a regular triangle in a convex polygon, base along base_dir.

    Variables (x, t, s): base midpoint at x*base_dir + t*apex_dir, side s,
    apex at height sqrt(3)/2 s above the base.  Membership of the three
    corners in the polygon is linear, so this is one LP.
    """
    from scipy.optimize import linprog

    N, b = quad.facet_normals, quad.facet_offsets
    ne = N @ base_dir
    nn = N @ apex_dir
    rows = []
    rhs = []
    h = math.sqrt(3.0) / 2.0
    for coeff in ((-0.5, 0.0), (0.5, 0.0), (0.0, h)):
        # corner = (x + coeff0 * s) base_dir + (t + coeff1 * s) apex_dir
        rows.append(np.column_stack([ne, nn, coeff[0] * ne + coeff[1] * nn]))
        rhs.append(b)
    A = np.vstack(rows)
    B = np.concatenate(rhs)
    res = linprog(np.array([0.0, 0.0, -1.0]), A_ub=A, b_ub=B,
                  bounds=[(None, None), (None, None), (0, None)],
                  method="highs")
    if not res.success:
        raise GeometryError("triangle fit LP failed")
    x, t, s = res.x
    base_mid = x * base_dir + t * apex_dir
    corners = np.array([base_mid - 0.5 * s * base_dir,
                        base_mid + 0.5 * s * base_dir,
                        base_mid + h * s * apex_dir])
    return s, corners


def inscribe_regular_triangle(body, return_frame=False):
    """Regular triangle inside the body, width >= (3 - sqrt(3))/2 w(body)."""
    frame = balanced_chord_direction(body)
    quad = frame.quad()
    base_dir = unit(frame.c - frame.a)
    nu = perp(base_dir)
    best = None
    for orient in (1.0, -1.0):
        s, corners = _largest_triangle_lp(quad, base_dir, orient * nu)
        if best is None or s > best[0]:
            best = (s, corners)
    tri = convex_hull(best[1])
    if return_frame:
        return tri, frame
    return tri
