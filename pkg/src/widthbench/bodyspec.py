"""JSON body descriptions consumed and produced by the CLI.

Supported kinds::

    {"kind": "polygon",  "vertices": [[x, y], ...]}
    {"kind": "polytope", "vertices": [[x, y, z], ...]}
    {"kind": "ball",     "dim": 2, "width": 1.0, "center": [0, 0]}
    {"kind": "reuleaux", "order": 3, "width": 1.0, "center": [0, 0],
     "pose": 0.0}

Parsing failures name the violated invariant.
"""

import json

import numpy as np

from .bodies import Ball, GeometryError, Polytope, ReuleauxPolygon


def parse_body(data):
    if isinstance(data, str):
        data = json.loads(data)
    kind = data.get("kind")
    if kind in ("polygon", "polytope"):
        verts = data.get("vertices")
        if not verts:
            raise GeometryError(f"{kind} requires a vertices list")
        arr = np.asarray(verts, dtype=float)
        if arr.ndim != 2:
            raise GeometryError("vertices must be a list of coordinate lists")
        if kind == "polygon" and arr.shape[1] != 2:
            raise GeometryError("polygon vertices must be planar")
        return Polytope(arr)
    if kind == "ball":
        width = data.get("width")
        if width is None or width <= 0:
            raise GeometryError("ball width must be positive")
        dim = data.get("dim", len(data.get("center", [0, 0])))
        center = data.get("center", [0.0] * dim)
        if len(center) != dim:
            raise GeometryError("ball center length must equal dim")
        return Ball(center, width / 2.0)
    if kind == "reuleaux":
        return ReuleauxPolygon(data.get("order", 3), data.get("width", 1.0),
                               data.get("center", (0.0, 0.0)),
                               data.get("pose", 0.0))
    raise GeometryError(f"unknown body kind {kind!r}")


def load_body(path):
    with open(path) as fh:
        return parse_body(json.load(fh))


def body_to_json(body):
    if isinstance(body, Ball):
        return {"kind": "ball", "dim": body.dim,
                "width": 2.0 * body.radius,
                "center": list(map(float, body.center))}
    if isinstance(body, ReuleauxPolygon):
        return {"kind": "reuleaux", "order": body.order, "width": body.width,
                "center": list(map(float, body.center)), "pose": body.pose}
    if isinstance(body, Polytope):
        kind = "polygon" if body.dim == 2 else "polytope"
        return {"kind": kind,
                "vertices": [list(map(float, v)) for v in body.vertices]}
    raise GeometryError(f"cannot serialize body kind {body.kind!r}")
