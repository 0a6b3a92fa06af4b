"""Figure rendering for CLI results.

Draws whatever geometry a result JSON carries: the body outline, diametral
chords, the constructed polytope, and slab boundaries.  Output format
follows the file extension (svg, png, pdf); planar results only.
"""

import numpy as np

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .bodies import GeometryError  # noqa: E402
from .bodyspec import parse_body  # noqa: E402


def _close(ring):
    return np.vstack([ring, ring[:1]])


def render_result(result, out_path):
    """Draw a result dictionary produced by the CLI into an image file."""
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.set_aspect("equal")
    drew = False

    body = result.get("body")
    if body is not None:
        b = parse_body(body)
        if b.dim != 2:
            raise GeometryError("rendering is planar only")
        pts = b.boundary_points(512)
        ax.plot(*_close(pts).T, color="black", lw=1.2, label="body")
        drew = True

    poly = result.get("polytope")
    if poly and poly.get("vertices"):
        ring = np.asarray(poly["vertices"], float)
        if ring.shape[1] != 2:
            raise GeometryError("rendering is planar only")
        ax.fill(*ring.T, facecolor="tab:blue", alpha=0.25, edgecolor="tab:blue",
                lw=1.5, label="polytope")
        drew = True

    tri = result.get("triangle")
    if tri:
        ring = np.asarray(tri, float)
        ax.fill(*ring.T, facecolor="tab:green", alpha=0.3,
                edgecolor="tab:green", lw=1.5, label="triangle")
        drew = True

    for chord in result.get("chords", []):
        a = np.asarray(chord["a"], float)
        b = np.asarray(chord["b"], float)
        ax.plot([a[0], b[0]], [a[1], b[1]], color="tab:red", lw=1.0)
        ax.plot([a[0], b[0]], [a[1], b[1]], "o", color="tab:red", ms=3)
        drew = True

    strips = result.get("strips", [])
    if strips:
        span = 0.0
        for s in strips:
            span = max(span, abs(s["lo"]), abs(s["hi"]))
        span *= 2.5
        for s in strips:
            n = np.asarray(s["normal"], float)
            t = np.array([-n[1], n[0]])
            for off in (s["lo"], s["hi"]):
                p0 = off * n - span * t
                p1 = off * n + span * t
                ax.plot([p0[0], p1[0]], [p0[1], p1[1]], color="gray",
                        lw=0.8, ls="--")
        drew = True

    if not drew:
        raise GeometryError("result contains nothing to draw")
    ax.autoscale()
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    fig.savefig(out_path, bbox_inches="tight")
    plt.close(fig)


def render_table(rows, out_path):
    """Bound values against n, one curve per dimension/kind."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ns = [r.n for r in rows]
    vals = [r.value for r in rows]
    kind = rows[0].kind if rows else ""
    ax.plot(ns, vals, "o-", color="tab:blue")
    ax.set_xlabel("n")
    ax.set_ylabel("bound value")
    ax.set_title(kind.replace("_", " "))
    ax.grid(True, alpha=0.3)
    fig.savefig(out_path, bbox_inches="tight")
    plt.close(fig)
