"""Circumscribing small-diameter polytopes via constant-width completion.

A body of diameter 1 sits inside some body of constant width 1.  Wrapping
that completion with one minimal slab per family line yields a polytope with
at most two facets per line whose diameter is at most 1/cos(covering
radius).  Planar completions are computed by the classical point-insertion
procedure driven by the ball hull; in dimension 3 only constant-width inputs
(balls) are accepted.
"""

import math
from dataclasses import dataclass

import numpy as np

from .bodies import (Ball, CompletionBody, GeometryError, Polytope,
                     ReuleauxPolygon, point_to_polygon_distance)
from .halfspaces import Strip, halfspace_intersection
from .inscribe import BoundReport, lambda_lower_bound
from .measure import diameter, min_width

#: delta-table entries whose published decimals disagree with the evaluated
#: reciprocal by more than 1e-3 (value as printed in the literature)
_LITERATURE_DELTA_PRINTS_3D = {6: 1.773, 8: 1.529, 12: 1.257}


@dataclass
class CompletionResult:
    body: CompletionBody
    width_error: float
    hausdorff_from_input: float


def _farthest_distance(points, sources):
    """max over source points of distance, for each query point."""
    d2 = ((points[:, None, :] - sources[None, :, :]) ** 2).sum(axis=2)
    return np.sqrt(d2.max(axis=1))


def ball_hull(body, radius, resolution=2048):
    """Intersection of all radius-r disks centered in the body (planar).

    Returns the boundary discretized at `resolution` exact points.  Accepts
    degenerate inputs such as segments.
    """
    if getattr(body, "dim", 2) != 2:
        raise GeometryError("ball hull is planar only")
    if isinstance(body, Ball):
        centers = body.boundary_points(max(64, resolution // 8))
    elif isinstance(body, Polytope):
        centers = body.vertices
    else:
        centers = body.boundary_points(max(64, resolution // 8))
    d, _ = diameter(body) if not getattr(body, "degenerate", False) else (
        float(np.max(np.linalg.norm(
            centers[:, None, :] - centers[None, :, :], axis=2))), None)
    if d > radius + 1e-9:
        raise GeometryError("diameter exceeds the hull radius")
    anchor = centers.mean(axis=0)
    return CompletionBody(_ball_hull_boundary(centers, radius, anchor,
                                              resolution), degenerate_ok=False)


def _ball_hull_boundary(centers, radius, anchor, resolution):
    """Exact boundary points of the disk intersection along radial rays."""
    th = np.linspace(0.0, 2 * math.pi, resolution, endpoint=False)
    rays = np.column_stack([np.cos(th), np.sin(th)])
    rel = anchor[None, :] - centers  # (m, 2)
    # per ray and center: t^2 + 2 t (ray . rel) + |rel|^2 - r^2 = 0
    b = rays @ rel.T  # (res, m)
    c = (rel ** 2).sum(axis=1)[None, :] - radius * radius
    disc = np.maximum(0.0, b * b - c)
    t = -b + np.sqrt(disc)
    return anchor[None, :] + t.min(axis=1)[:, None] * rays


def complete_to_constant_width_2d(body, eps=1e-3, resolution=1024,
                                  max_iter=10**4):
    """Grow a diameter-1 planar body to constant width 1 within eps.

    Repeatedly takes the ball hull of the current point set and adjoins its
    boundary point farthest from the current body, until the two agree to
    within eps and the exact width deficit of the current polygon is below
    eps.  The result keeps diameter exactly 1, so its width error is its
    width deficit.
    """
    if body.dim != 2:
        raise GeometryError("completion is planar only")
    d0, _ = diameter(body)
    if abs(d0 - 1.0) > 1e-6:
        raise GeometryError("body must be normalized to diameter 1")
    if isinstance(body, Polytope):
        pts = body.vertices.copy()
    else:
        pts = body.boundary_points(resolution)
    input_ring = Polytope(pts).vertices

    current = Polytope(pts)
    for it in range(max_iter):
        anchor = current.vertices.mean(axis=0)
        boundary = _ball_hull_boundary(current.vertices, 1.0, anchor, resolution)
        gaps = point_to_polygon_distance(boundary, current.vertices)
        hausdorff = float(gaps.max())
        deficit = 1.0 - min_width(current)[0]
        if hausdorff <= eps and deficit <= eps:
            out = CompletionBody(current.vertices)
            hin = float(point_to_polygon_distance(
                out.vertices, input_ring).max()) if len(out.vertices) else 0.0
            return CompletionResult(body=out, width_error=max(0.0, deficit),
                                    hausdorff_from_input=hin)
        far = boundary[int(np.argmax(gaps))]
        pts = np.vstack([current.vertices, far])
        current = Polytope(pts)
    raise GeometryError(
        f"completion did not converge: residual {hausdorff:g} after {max_iter} steps")


def _is_constant_width(body):
    return isinstance(body, (Ball, ReuleauxPolygon))


def circumscribe_small_diameter(body, family, eps=1e-3):
    """Polytope with <= 2k facets containing the body, of small diameter."""
    poly, _, _ = circumscribe_with_info(body, family, eps=eps)
    return poly


def circumscribe_with_info(body, family, eps=1e-3, resolution=1024):
    """Circumscription plus the completion result and strips used."""
    if family.dim != body.dim:
        raise GeometryError("family dimension does not match the body")
    if body.dim == 2:
        d0, _ = diameter(body)
        scaled = body.scaled(1.0 / d0)
        completion = None
        if _is_constant_width(scaled):
            w_body = scaled
        else:
            completion = complete_to_constant_width_2d(scaled, eps=eps,
                                                       resolution=resolution)
            w_body = completion.body
        strips = [Strip.around(w_body, line) for line in family.lines]
        poly = halfspace_intersection(strips).scaled(d0)
        strips = [Strip(s.normal, s.lo * d0, s.hi * d0) for s in strips]
        return poly, completion, strips
    if body.dim == 3:
        if not _is_constant_width(body):
            raise GeometryError("3D completion unsupported")
        strips = [Strip.around(body, line) for line in family.lines]
        return halfspace_intersection(strips), None, strips
    raise GeometryError("circumscription limited to dim <= 3")


def delta_upper_bound(d, n, allow_optimizer=False):
    """Upper bound on the worst circumscribed diameter ratio, n facets."""
    lam = lambda_lower_bound(d, n, allow_optimizer=allow_optimizer)
    value = 1.0 / lam.value
    note = ""
    printed = _LITERATURE_DELTA_PRINTS_3D.get(n) if d == 3 else None
    if printed is not None and abs(printed - value) > 1e-3:
        note = (f"literature prints {printed}; evaluated bound is "
                f"{value:.4f}")
    return BoundReport(d=d, n=n, kind="delta_upper", value=value,
                       family_id=lam.family_id, source=lam.source, note=note)


def delta_table(d, nmax, allow_optimizer=False):
    return [delta_upper_bound(d, n, allow_optimizer=allow_optimizer)
            for n in range(2 * d, nmax + 1)]


def regular_circumscribed_ngon(n):
    """Regular n-gon tangent to the width-1 disk and its diameter ratio.

    The ratio is computed from the polygon itself: 1/cos(pi/n) for even n
    and cos(pi/2n)/cos(pi/n) for odd n.
    """
    if n < 3:
        raise GeometryError("need n >= 3")
    circumradius = 0.5 / math.cos(math.pi / n)
    ang = 2.0 * math.pi * np.arange(n) / n + math.pi / n
    poly = Polytope(circumradius * np.column_stack([np.cos(ang), np.sin(ang)]))
    ratio = diameter(poly)[0] / 1.0
    return poly, ratio
