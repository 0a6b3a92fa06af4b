"""Inscribing wide polytopes from diametral chords along a line family.

Taking one diametral chord per family line and passing to the convex hull
produces a polytope with at most twice as many vertices as lines whose
minimal width is at least cos(covering radius) times the body's minimal
width.  The bound tables expose the resulting lower bounds on the worst-case
inscribed width ratio (lambda) for polytopes with a bounded vertex count.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .bodies import GeometryError, convex_hull
from .chords import diametral_chord
from .linefamilies import (LineFamily, icosahedral_family, literature_bounds_3d,
                           orthogonal_axes, planar_family, plus_one_family,
                           optimize_family)
from .measure import min_width


@dataclass
class InscriptionResult:
    polytope: object
    chords: list
    family: LineFamily
    width_ratio: float
    bound: float

    def __post_init__(self):
        if len(self.polytope.vertices) > 2 * len(self.family):
            raise GeometryError("vertex budget exceeded")


@dataclass
class BoundReport:
    """One row of a lambda/delta table."""

    d: int
    n: int
    kind: str  # "lambda_lower" or "delta_upper"
    value: float
    family_id: str
    source: str  # "analytic", "literature", or "optimized"
    note: str = ""

    def __post_init__(self):
        if self.kind == "lambda_lower" and not 0.0 < self.value <= 1.0:
            raise GeometryError("lambda bound out of range")
        if self.kind == "delta_upper" and self.value < 1.0:
            raise GeometryError("delta bound out of range")


def inscribe_wide_polytope(body, family, rotation=None):
    """Hull of one diametral chord per family line.

    An optional rotation matrix is applied to the family before the chords
    are taken; the width guarantee is rotation invariant.
    """
    fam = family if rotation is None else family.rotated(rotation)
    if fam.dim != body.dim:
        raise GeometryError("family dimension does not match the body")
    chords = [diametral_chord(body, line) for line in fam.lines]
    pts = np.vstack([[c.a, c.b] for c in chords]).reshape(-1, body.dim)
    poly = convex_hull(pts)
    w_body = min_width(body)[0]
    w_poly = min_width(poly)[0]
    radius = fam.certified_radius
    bound = math.cos(radius) if radius is not None else float("nan")
    return InscriptionResult(polytope=poly, chords=chords, family=fam,
                             width_ratio=w_poly / w_body, bound=bound)


@dataclass
class VerificationReport:
    ok: bool
    checks: list = field(default_factory=list)

    def to_json(self):
        return {"ok": self.ok,
                "checks": [{"name": n, "ok": o, "detail": d}
                           for n, o, d in self.checks]}


def verify_inscription(body, result, slack=1e-9):
    """Recheck containment, vertex budget, and the width-ratio bound."""
    checks = []
    poly = result.polytope
    inside = all(body.contains(v, slack) for v in poly.vertices)
    checks.append(("containment", inside,
                   f"{len(poly.vertices)} vertices, slack {slack:g}"))
    budget = len(poly.vertices) <= 2 * len(result.family)
    checks.append(("vertex_budget", budget,
                   f"{len(poly.vertices)} <= {2 * len(result.family)}"))
    w_body = min_width(body)[0]
    w_poly = min_width(poly)[0]
    ratio = w_poly / w_body
    consistent = abs(ratio - result.width_ratio) <= 1e-9
    checks.append(("ratio_recompute", consistent,
                   f"stored {result.width_ratio:.12g}, recomputed {ratio:.12g}"))
    bound_ok = ratio >= result.bound - 1e-9
    checks.append(("width_ratio_bound", bound_ok,
                   f"{ratio:.12g} >= {result.bound:.12g} - 1e-9"))
    return VerificationReport(ok=all(o for _, o, _ in checks), checks=checks)


def _radius_candidates(d, k, allow_optimizer=False, seed=0, iters=300):
    """(radius, family_id, source) options valid for k lines in dim d."""
    out = []
    if d == 2:
        out.append((math.pi / (2 * k), f"planar({k})", "analytic"))
        return out
    if k >= d:
        out.append((math.acos(1.0 / math.sqrt(d)), f"orthogonal({d})", "analytic"))
    if d >= 3 and k >= d + 1:
        out.append((math.acos(math.sqrt(3.0 / (3 * d - 2))),
                    f"plusone({d})", "analytic"))
    if d == 3:
        if k >= 6:
            fam = icosahedral_family()
            out.append((fam.certified_radius, "icosahedral", "analytic"))
        for kk, deg in literature_bounds_3d():
            if kk <= k:
                out.append((math.radians(deg), f"literature(k={kk})",
                            "literature"))
    if allow_optimizer:
        fam = optimize_family(d, k, seed=seed, iters=iters)
        out.append((fam.certified_radius, fam.name, "optimized"))
    return out


def lambda_lower_bound(d, n, allow_optimizer=False):
    """Lower bound on the worst inscribed width ratio over n-vertex polytopes."""
    if n < 2 * d:
        raise GeometryError("theorem precondition: n >= 2d required")
    k = n // 2
    cands = _radius_candidates(d, k, allow_optimizer=allow_optimizer)
    if not cands:
        raise GeometryError(f"no line family available for d={d}, k={k}")
    radius, family_id, source = min(cands, key=lambda t: t[0])
    for r, fid, src in cands:
        # analytic radii are exact; prefer them over rounded prints on ties
        if src == "analytic" and r <= radius + 1e-6:
            radius, family_id, source = r, fid, src
            break
    return BoundReport(d=d, n=n, kind="lambda_lower", value=math.cos(radius),
                       family_id=family_id, source=source)


def family_for(d, k, optimize=False, seed=0, iters=300):
    """Best constructed family with at most k lines for dimension d."""
    if d == 2:
        return planar_family(k)
    options = []
    if k >= d:
        options.append(orthogonal_axes(d))
    if d >= 3 and k >= d + 1:
        options.append(plus_one_family(d))
    if d == 3 and k >= 6:
        options.append(icosahedral_family())
    if optimize:
        options.append(optimize_family(d, k, seed=seed, iters=iters))
    if not options:
        raise GeometryError(f"no line family available for d={d}, k={k}")
    return min(options, key=lambda f: f.certified_radius)


def lambda_table(d, nmax, allow_optimizer=False):
    return [lambda_lower_bound(d, n, allow_optimizer=allow_optimizer)
            for n in range(2 * d, nmax + 1)]
