"""Widest n-gons inscribed in the disk of minimal width 1.

Vertices live on the circle of radius 1/2 and are stored as strictly
increasing angles in degrees with the last vertex pinned at 360 (rotation
gauge).  Odd n admits a closed form (the regular n-gon); for even n the
module carries explicit record configurations (a deltoid, a hexagon, an
octagon) and a seeded coordinate-ascent search.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .bodies import GeometryError, Polytope

SQRT2 = math.sqrt(2.0)

#: first vertex angle of the record hexagon, degrees
HEXAGON_ALPHA1 = math.degrees(math.acos((math.sqrt(145.0) - 5.0) / 20.0))

#: vertex angles of the record octagon, degrees
OCTAGON_ANGLES = (50.432, 100.864, 151.296, 180.0, 208.704, 259.136,
                  309.568, 360.0)


def _ngon_min_width(angles_rad):
    """Exact minimal width of the polygon of circle points at these angles."""
    ang = np.sort(np.asarray(angles_rad, float))
    v = 0.5 * np.column_stack([np.cos(ang), np.sin(ang)])
    e = np.roll(v, -1, axis=0) - v
    lens = np.linalg.norm(e, axis=1)
    keep = lens > 1e-14
    if keep.sum() < 3:
        return 0.0
    n = np.column_stack([e[keep, 1], -e[keep, 0]]) / lens[keep, None]
    offs = np.einsum("ij,ij->i", n, v[keep])
    heights = offs - (v @ n.T).min(axis=0)
    return float(heights.min())


@dataclass
class InscribedNgon:
    """n-gon inscribed in the width-1 disk, addressed by vertex angles."""

    n: int
    angles: list  # degrees, strictly increasing in (0, 360]
    vertices: np.ndarray = field(init=False)
    min_width: float = field(init=False)

    def __post_init__(self):
        ang = np.asarray(self.angles, float)
        if len(ang) != self.n:
            raise GeometryError("angle count does not match n")
        if np.any(np.diff(ang) <= 0) or ang[0] <= 0 or ang[-1] > 360.0:
            raise GeometryError("angles must increase strictly within (0, 360]")
        rad = np.radians(ang)
        self.vertices = 0.5 * np.column_stack([np.cos(rad), np.sin(rad)])
        self.min_width = _ngon_min_width(rad)

    def polygon(self):
        return Polytope(self.vertices)

    def to_json(self):
        return {"n": self.n,
                "angles_deg": [float(a) for a in self.angles],
                "vertices": [list(map(float, v)) for v in self.vertices],
                "min_width": float(self.min_width)}


def regular_odd_ngon(n):
    """Regular n-gon for odd n; the widest inscribed n-gon in the disk."""
    if n < 3 or n % 2 == 0:
        raise GeometryError("n must be odd (use search for even n)")
    return InscribedNgon(n, [360.0 * j / n for j in range(1, n + 1)])


def regular_odd_width(n):
    return 0.5 + 0.5 * math.cos(math.pi / n)


def widest_deltoid():
    """The record kite with vertices (1/2, 0), (-1/6, +-sqrt(2)/3), (-1/2, 0).

    Its minimal width evaluates to 4 sqrt(3) / 9, attained orthogonally to
    the two sides meeting at (1/2, 0).
    """
    a = math.degrees(math.atan2(SQRT2 / 3.0, -1.0 / 6.0))
    return InscribedNgon(4, [a, 180.0, 360.0 - a, 360.0])


def deltoid_family(x3_angle_deg):
    """Kite with the third vertex moved along the circle, width preserved.

    The replacement position must keep the angles at the two fixed side
    vertices at least as large as the apex angle of the kite; otherwise the
    violated angle is reported.
    """
    base = widest_deltoid()
    v1 = base.vertices[3]  # (1/2, 0), stored at 360 degrees
    v2 = base.vertices[0]
    v4 = base.vertices[2]

    def corner_angle(a, b, c):
        u1 = a - b
        u2 = c - b
        cosv = float(u1 @ u2) / (np.linalg.norm(u1) * np.linalg.norm(u2))
        return math.degrees(math.acos(max(-1.0, min(1.0, cosv))))

    apex = corner_angle(v4, v1, v2)
    rad = math.radians(x3_angle_deg)
    x3 = 0.5 * np.array([math.cos(rad), math.sin(rad)])
    tol = 1e-9
    a_12 = corner_angle(v1, v2, x3)
    if a_12 < apex - tol:
        raise GeometryError(
            f"outside admissible arc: angle at the upper side vertex "
            f"{a_12:.6f} deg is below the apex angle {apex:.6f} deg")
    a_14 = corner_angle(v1, v4, x3)
    if a_14 < apex - tol:
        raise GeometryError(
            f"outside admissible arc: angle at the lower side vertex "
            f"{a_14:.6f} deg is below the apex angle {apex:.6f} deg")
    angles = sorted([math.degrees(math.atan2(v[1], v[0])) % 360.0
                     for v in (v2, x3, v4)])
    return InscribedNgon(4, angles + [360.0])


def deltoid_admissible_range():
    """Angular range (degrees) for the movable kite vertex."""
    # the extremes put a side of length sqrt(2/3) on the circle, which
    # subtends a central angle of 2 asin(sqrt(2/3))
    span = math.degrees(2.0 * math.asin(math.sqrt(2.0 / 3.0)))
    a2 = math.degrees(math.atan2(SQRT2 / 3.0, -1.0 / 6.0))
    return (360.0 - a2) - span, a2 + span


def hexagon_width_formula(alpha1_deg):
    """Closed-form minimal width of the symmetric record hexagon."""
    c = math.cos(math.radians(alpha1_deg))
    return (0.5 + 0.5 * c - c * c) * math.sqrt(2.0 + 2.0 * c)


def best_known_hexagon():
    a1 = HEXAGON_ALPHA1
    return InscribedNgon(6, [a1, 2 * a1, 180.0, 360.0 - 2 * a1,
                             360.0 - a1, 360.0])


def hexagon_flex_range():
    """Admissible range (degrees) of the middle hexagon vertex."""
    return 360.0 - 3 * HEXAGON_ALPHA1, 3 * HEXAGON_ALPHA1


def hexagon_flex(alpha3_deg):
    """Record hexagon with the middle vertex moved; width is unchanged."""
    lo, hi = hexagon_flex_range()
    if not lo - 1e-9 <= alpha3_deg <= hi + 1e-9:
        raise GeometryError(
            f"alpha3 {alpha3_deg:.6f} deg outside [{lo:.6f}, {hi:.6f}]")
    a1 = HEXAGON_ALPHA1
    return InscribedNgon(6, [a1, 2 * a1, alpha3_deg, 360.0 - 2 * a1,
                             360.0 - a1, 360.0])


def best_known_octagon():
    return InscribedNgon(8, list(OCTAGON_ANGLES))


def _search_objective(free_rad):
    ang = np.clip(free_rad, 1e-9, 2 * math.pi - 1e-9)
    return _ngon_min_width(np.append(ang, 2 * math.pi))


def search_ngon(n, seed=0, iters=2000):
    """Seeded coordinate-ascent maximization of the inscribed width.

    Restarts from the regular n-gon, a split-vertex (n-1)-gon, and random
    angle vectors; the last vertex is pinned at 360 degrees as the rotation
    gauge.  Deterministic for a fixed seed.
    """
    if n < 3:
        raise GeometryError("need n >= 3")
    rng = np.random.default_rng(seed)
    starts = [np.array([2 * math.pi * j / n for j in range(1, n)])]
    if n > 3:
        base = np.array([2 * math.pi * j / (n - 1) for j in range(1, n - 1)])
        starts.append(np.sort(np.append(base, base[0] + 0.05)))
    for _ in range(6):
        starts.append(np.sort(rng.uniform(0.05, 2 * math.pi - 0.05, n - 1)))

    best_x, best_v = None, -1.0
    for x0 in starts:
        x = x0.copy()
        val = _search_objective(x)
        h = 0.3
        for _ in range(iters):
            improved = False
            for j in range(n - 1):
                for sgn in (1.0, -1.0):
                    cand = x.copy()
                    cand[j] += sgn * h
                    cval = _search_objective(cand)
                    if cval > val + 1e-15:
                        x, val = cand, cval
                        improved = True
                        break
            if not improved:
                h *= 0.6
                if h < 1e-10:
                    break
        if val > best_v:
            best_x, best_v = x, val

    ang = np.sort(np.clip(best_x, 1e-9, 2 * math.pi - 1e-9))
    degs = list(np.degrees(ang)) + [360.0]
    # collapse numerically coincident vertices (the gon may use fewer)
    out = []
    for a in degs:
        if not out or a - out[-1] > 1e-7:
            out.append(a)
    while len(out) < n:
        # re-split the widest gap to restore the vertex count
        gaps = np.diff([0.0] + out)
        j = int(np.argmax(gaps))
        lo = out[j - 1] if j > 0 else 0.0
        out.insert(j, lo + gaps[j] / 2.0)
    return InscribedNgon(n, out)
