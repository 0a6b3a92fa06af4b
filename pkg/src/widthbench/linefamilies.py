"""Families of lines through the origin and their covering radii.

A family of k lines covers the sphere with k antipodal pairs of caps whose
angular radius is the covering radius: the largest angle any direction makes
with its nearest family line.  Planar families are certified exactly from
angular gaps; in dimension 3 certification samples a Fibonacci grid and
polishes the worst directions with a shrinking pattern search.
"""

import json
import math
import os

import numpy as np

from .bodies import GeometryError, unit
from .measure import fibonacci_sphere, _pattern_refine

SQRT3 = math.sqrt(3.0)

#: published upper bounds (degrees) on the 3D covering radius for k lines
LITERATURE_3D = {
    3: 54.7356,
    4: 49.1066,
    5: 45.9243,
    6: 37.3774,
    7: 36.2060,
    8: 33.5473,
}

#: covering radius of the six icosahedron vertex lines (radians)
ICOSAHEDRAL_RADIUS = math.acos((1.0 / SQRT3) / math.tan(math.pi / 5.0))


def canonical_line(v):
    """Unit representative with the first nonzero coordinate positive."""
    v = unit(v)
    for x in v:
        if abs(x) > 1e-12:
            return v if x > 0 else -v
    raise GeometryError("zero line vector")


class LineFamily:
    """k antipodal line classes through the origin in dimension d."""

    def __init__(self, dim, lines, certified_radius=None, name=""):
        self.dim = int(dim)
        reps = np.array([canonical_line(v) for v in np.atleast_2d(lines)])
        if reps.shape[1] != self.dim:
            raise GeometryError("line dimension mismatch")
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                dot = abs(float(reps[i] @ reps[j]))
                sin_angle = math.sqrt(max(0.0, 1.0 - min(1.0, dot) ** 2))
                if math.asin(sin_angle) <= 1e-9:
                    raise GeometryError("duplicate or antipodal lines in family")
        self.lines = reps
        self.certified_radius = certified_radius
        self.name = name or f"family(k={len(reps)},d={dim})"

    def __len__(self):
        return len(self.lines)

    def extended(self, extra_lines, name=""):
        return LineFamily(self.dim, np.vstack([self.lines, np.atleast_2d(extra_lines)]),
                          certified_radius=None, name=name)

    def rotated(self, rot):
        return LineFamily(self.dim, self.lines @ np.asarray(rot, float).T,
                          certified_radius=self.certified_radius,
                          name=self.name + "+rot")

    def min_angle_to(self, dirs):
        """Angle from each unit direction to its nearest family line."""
        dots = np.abs(np.atleast_2d(dirs) @ self.lines.T)
        return np.arccos(np.clip(dots.max(axis=1), -1.0, 1.0))

    def to_json(self):
        return {
            "dim": self.dim,
            "lines": [list(map(float, v)) for v in self.lines],
            "radius_rad": None if self.certified_radius is None
            else float(self.certified_radius),
            "certified": self.certified_radius is not None,
        }

    @classmethod
    def from_json(cls, data):
        radius = data.get("radius_rad")
        return cls(data["dim"], np.array(data["lines"], float),
                   certified_radius=radius if data.get("certified") else None)

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def planar_family(m):
    """m lines at angles j*pi/m; covering radius pi/(2m) exactly."""
    if m < 2:
        raise GeometryError("planar family needs m >= 2")
    ang = np.arange(m) * math.pi / m
    lines = np.column_stack([np.cos(ang), np.sin(ang)])
    return LineFamily(2, lines, certified_radius=math.pi / (2 * m),
                      name=f"planar({m})")


def orthogonal_axes(d):
    """The d coordinate axes; covering radius arccos(1/sqrt(d))."""
    if d < 2:
        raise GeometryError("dimension must be at least 2")
    return LineFamily(d, np.eye(d), certified_radius=math.acos(1.0 / math.sqrt(d)),
                      name=f"orthogonal({d})")


def plus_one_family(d):
    """d+1 lines: axes with the second one split into two at 60 degrees.

    Covering radius arccos(sqrt(3/(3d-2))).
    """
    if d < 3:
        raise GeometryError("plus-one family needs d >= 3")
    lines = [np.eye(d)[0]]
    v1 = np.zeros(d)
    v1[0], v1[1] = 0.5, SQRT3 / 2
    v2 = np.zeros(d)
    v2[0], v2[1] = -0.5, SQRT3 / 2
    lines.extend([v1, v2])
    lines.extend(np.eye(d)[2:])
    return LineFamily(d, np.array(lines),
                      certified_radius=math.acos(math.sqrt(3.0 / (3 * d - 2))),
                      name=f"plusone({d})")


def icosahedral_family():
    """Six lines through opposite icosahedron vertices."""
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    base = []
    for a, b in [(1.0, phi), (1.0, -phi)]:
        base.append([0.0, a, b])
        base.append([a, b, 0.0])
        base.append([b, 0.0, a])
    return LineFamily(3, np.array(base), certified_radius=ICOSAHEDRAL_RADIUS,
                      name="icosahedral")


def _max_workers():
    try:
        return max(1, int(os.environ.get("WIDTHBENCH_THREADS", "1")))
    except ValueError:
        return 1


def covering_radius(family, resolution=10**5):
    """Largest angle between any direction and its nearest family line.

    Planar families are evaluated exactly from the angular gaps; otherwise a
    Fibonacci grid of `resolution` directions is scanned and the ten worst
    samples are polished by pattern search.
    """
    if len(family) == 0:
        raise GeometryError("empty family")
    if resolution < 10**3:
        raise GeometryError("resolution must be at least 1e3")
    if family.dim == 2:
        ang = np.sort(np.arctan2(family.lines[:, 1], family.lines[:, 0]) % math.pi)
        gaps = np.diff(np.concatenate([ang, [ang[0] + math.pi]]))
        return float(gaps.max() / 2.0)
    if family.dim == 3:
        dirs = fibonacci_sphere(resolution)
    else:
        rng = np.random.default_rng(12345)
        dirs = rng.standard_normal((resolution, family.dim))
        dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    chunk = 2 * 10**5
    blocks = [dirs[s:s + chunk] for s in range(0, len(dirs), chunk)]

    def scan(block):
        ang = family.min_angle_to(block)
        take = np.argsort(ang)[-10:]
        return ang[take], block[take]

    workers = _max_workers()
    if workers > 1 and len(blocks) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            scanned = list(pool.map(scan, blocks))
    else:
        scanned = [scan(b) for b in blocks]
    worst_vals, worst_dirs = [], []
    for vals, ds in scanned:
        worst_vals.extend(vals)
        worst_dirs.extend(ds)
    order = np.argsort(worst_vals)[-10:]
    best = 0.0
    for i in order:
        val, _ = _pattern_refine(
            lambda v: float(family.min_angle_to(v[None, :])[0]),
            worst_dirs[i], worst_vals[i], minimize=False)
        best = max(best, val)
    return float(best)


def literature_bounds_3d():
    """Published upper bounds on the 3D covering radius, in degrees."""
    return [(k, LITERATURE_3D[k]) for k in sorted(LITERATURE_3D)]


def _random_lines(rng, d, k):
    v = rng.standard_normal((k, d))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def _baseline_family(d, k):
    if d == 2:
        return planar_family(min(k, 64))
    options = []
    if k >= d:
        options.append(orthogonal_axes(d))
    if d >= 3 and k >= d + 1:
        options.append(plus_one_family(d))
    if d == 3 and k >= 6:
        options.append(icosahedral_family())
    best = min(options, key=lambda f: f.certified_radius)
    rng = np.random.default_rng(0)
    lines = best.lines
    while len(lines) < k:
        lines = np.vstack([lines, _random_lines(rng, d, 1)])
    return LineFamily(d, lines)


def _lloyd_step(lines, samples):
    dots = samples @ lines.T
    owner = np.argmax(np.abs(dots), axis=1)
    new = lines.copy()
    for j in range(len(lines)):
        sel = samples[owner == j]
        if len(sel) < 2:
            continue
        m = sel.T @ sel
        w, v = np.linalg.eigh(m)
        new[j] = v[:, -1]
    return new


def optimize_family(d, k, seed=0, iters=300):
    """Local search for k lines of small covering radius (deterministic).

    32 restarts: the analytic baseline plus seeded random starts.  Each
    restart runs antipodal Lloyd iterations on a fixed sample grid, then a
    perturbation descent on the max-min angle over the same grid.
    """
    if k < d:
        raise GeometryError("need at least d lines")
    rng = np.random.default_rng(seed)
    if d == 3:
        samples = fibonacci_sphere(8192)
    elif d == 2:
        th = np.linspace(0, math.pi, 2048, endpoint=False)
        samples = np.column_stack([np.cos(th), np.sin(th)])
    else:
        samples = rng.standard_normal((8192, d))
        samples /= np.linalg.norm(samples, axis=1, keepdims=True)

    def objective(lines):
        dots = np.abs(samples @ lines.T)
        ang = np.arccos(np.clip(dots.max(axis=1), 0, 1))
        j = int(np.argmax(ang))
        return float(ang[j]), samples[j]

    baseline = _baseline_family(d, k)
    starts = [baseline.lines]
    for _ in range(31):
        starts.append(_random_lines(rng, d, k))

    best_lines, best_val = baseline.lines, objective(baseline.lines)[0]
    for lines in starts:
        lines = lines.copy()
        for _ in range(50):
            lines = _lloyd_step(lines, samples)
        val, worst = objective(lines)
        eta = 0.15
        for it in range(iters):
            # pull the line nearest to the worst-covered direction toward it
            dots = lines @ worst
            j = int(np.argmax(np.abs(dots)))
            sgn = 1.0 if dots[j] >= 0 else -1.0
            cand = lines.copy()
            pull = sgn * worst - cand[j] * float(cand[j] @ (sgn * worst))
            cand[j] = unit(cand[j] + eta * pull)
            cval, cworst = objective(cand)
            if cval < val:
                lines, val, worst = cand, cval, cworst
                continue
            cand = lines.copy()
            jj = it % k
            cand[jj] = unit(cand[jj] + eta * rng.standard_normal(d))
            cval, cworst = objective(cand)
            if cval < val:
                lines, val, worst = cand, cval, cworst
            else:
                eta = max(eta * 0.97, 1e-3)
        if val < best_val:
            best_lines, best_val = lines, val

    fam = LineFamily(d, best_lines, name=f"optimized(k={k},d={d})")
    fam.certified_radius = covering_radius(fam, resolution=max(10**5, 10**3))
    base_cert = baseline.certified_radius
    if base_cert is None:
        base_cert = covering_radius(baseline, resolution=10**5)
    if fam.certified_radius > base_cert:
        out = LineFamily(d, baseline.lines, certified_radius=base_cert,
                         name=f"optimized(k={k},d={d})")
        return out
    return fam


def random_rotation(dim, rng):
    """Haar-ish random rotation matrix."""
    m = rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(m)
    q *= np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q
