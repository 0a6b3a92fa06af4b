"""Command-line interface.

JSON goes to stdout (and optionally to a file, written atomically); tables
are CSV; figures are rendered with matplotlib to the format implied by the
output extension.  All numbers are printed with 12 significant digits so
identical invocations produce byte-identical output.
"""

import argparse
import json
import math
import os
import sys
import tempfile

import numpy as np

from .bodies import GeometryError, unit
from .bodyspec import body_to_json, load_body
from .chords import diametral_chord
from .circumscribe import circumscribe_with_info, delta_table
from .diskngons import (best_known_hexagon, best_known_octagon, regular_odd_ngon,
                        search_ngon, widest_deltoid)
from .inscribe import (family_for, inscribe_wide_polytope, lambda_table,
                       verify_inscription)
from .linefamilies import covering_radius, optimize_family
from .measure import diameter, min_width
from .triangle import inscribe_regular_triangle

EXIT_PRECONDITION = 2
EXIT_NUMERIC = 1


def _round12(x):
    return float(f"{float(x):.12g}")


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (np.floating, float)):
        return _round12(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    return obj


def _atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".widthbench-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.chmod(tmp, 0o644)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(result, out=None):
    text = json.dumps(_jsonable(result), indent=2, sort_keys=False) + "\n"
    sys.stdout.write(text)
    if out:
        _atomic_write(out, text)


def _normalized(body, mode):
    """Scale a body to unit minimal width or unit diameter."""
    if mode == "width":
        w = min_width(body)[0]
        return body.scaled(1.0 / w), 1.0 / w
    d = diameter(body)[0]
    return body.scaled(1.0 / d), 1.0 / d


def _chord_json(c):
    return {"a": list(c.a), "b": list(c.b), "direction": list(c.direction),
            "length": c.length}


def cmd_width(args):
    body = load_body(args.body)
    w, u = min_width(body)
    _emit({"command": "width", "min_width": w, "direction": list(u)}, args.out)
    return 0


def cmd_diameter(args):
    body = load_body(args.body)
    d, (p, q) = diameter(body)
    _emit({"command": "diameter", "diameter": d,
           "pair": [list(p), list(q)]}, args.out)
    return 0


def cmd_chord(args):
    body = load_body(args.body)
    u = unit([float(x) for x in args.dir.split(",")])
    if len(u) != body.dim:
        raise GeometryError("direction dimension does not match the body")
    c = diametral_chord(body, u)
    _emit({"command": "chord", **_chord_json(c)}, args.out)
    return 0


def cmd_lines(args):
    if args.optimize:
        fam = optimize_family(args.d, args.k, seed=args.seed, iters=args.iters)
    else:
        fam = family_for(args.d, args.k)
        if args.resolution:
            fam.certified_radius = covering_radius(fam, args.resolution)
    payload = fam.to_json()
    payload["name"] = fam.name
    _emit(payload, args.out)
    return 0


def cmd_inscribe(args):
    body = load_body(args.body)
    if args.n < 2 * body.dim:
        raise GeometryError("theorem precondition: n >= 2d required")
    scaled, factor = _normalized(body, "width")
    fam = family_for(scaled.dim, args.n // 2, optimize=args.optimize,
                     seed=args.seed)
    result = inscribe_wide_polytope(scaled, fam)
    report = verify_inscription(scaled, result)
    if not report.ok:
        raise RuntimeError("inscription failed verification: "
                           + json.dumps(report.to_json()))
    _emit({
        "command": "inscribe",
        "scale": factor,
        "body": body_to_json(scaled),
        "family": fam.to_json(),
        "chords": [_chord_json(c) for c in result.chords],
        "polytope": {"vertices": [list(v) for v in result.polytope.vertices]},
        "width_body": 1.0,
        "width_polytope": result.width_ratio,
        "width_ratio": result.width_ratio,
        "bound": result.bound,
        "verification": report.to_json(),
    }, args.out)
    return 0


def cmd_triangle(args):
    body = load_body(args.body)
    if body.dim != 2:
        raise GeometryError("triangle inscription is planar only")
    scaled, factor = _normalized(body, "width")
    tri, frame = inscribe_regular_triangle(scaled, return_frame=True)
    w_tri = min_width(tri)[0]
    sides = [float(np.linalg.norm(tri.vertices[i] - tri.vertices[(i + 1) % 3]))
             for i in range(3)]
    if not all(scaled.contains(v, 1e-9) for v in tri.vertices):
        raise RuntimeError("triangle failed the containment check")
    _emit({
        "command": "triangle",
        "scale": factor,
        "body": body_to_json(scaled),
        "triangle": [list(v) for v in tri.vertices],
        "side_lengths": sides,
        "min_width": w_tri,
        "width_ratio": w_tri,
        "balanced_direction": frame.direction,
        "split_ratio": frame.split,
        "chords": [
            {"a": list(frame.a), "b": list(frame.c), "length":
             float(np.linalg.norm(frame.c - frame.a))},
            {"a": list(frame.near_end), "b": list(frame.far_end), "length":
             float(np.linalg.norm(frame.far_end - frame.near_end))},
        ],
    }, args.out)
    return 0


def cmd_circumscribe(args):
    body = load_body(args.body)
    if args.n < 2 * body.dim:
        raise GeometryError("theorem precondition: n >= 2d required")
    scaled, factor = _normalized(body, "diameter")
    fam = family_for(scaled.dim, args.n // 2, optimize=args.optimize,
                     seed=args.seed)
    poly, completion, strips = circumscribe_with_info(
        scaled, fam, eps=args.eps, resolution=args.resolution)
    d_poly = diameter(poly)[0]
    if not all(poly.contains(v, 1e-9) for v in _sample_points(scaled)):
        raise RuntimeError("circumscription failed the containment check")
    payload = {
        "command": "circumscribe",
        "scale": factor,
        "body": body_to_json(scaled),
        "family": fam.to_json(),
        "strips": [{"normal": list(s.normal), "lo": s.lo, "hi": s.hi}
                   for s in strips],
        "polytope": {"vertices": [list(v) for v in poly.vertices]},
        "diameter_body": 1.0,
        "diameter_polytope": d_poly,
        "diameter_ratio": d_poly,
        "bound": 1.0 / math.cos(fam.certified_radius),
    }
    if completion is not None:
        payload["completion"] = {
            "width_error": completion.width_error,
            "hausdorff_from_input": completion.hausdorff_from_input,
        }
    _emit(payload, args.out)
    return 0


def _sample_points(body):
    from .bodies import Polytope

    if isinstance(body, Polytope):
        return body.vertices
    return body.boundary_points(64)


def cmd_ngon(args):
    if args.search:
        gon = search_ngon(args.n, seed=args.seed, iters=args.iters)
    elif args.n % 2 == 1:
        gon = regular_odd_ngon(args.n)
    elif args.n == 4:
        gon = widest_deltoid()
    elif args.n == 6:
        gon = best_known_hexagon()
    elif args.n == 8:
        gon = best_known_octagon()
    else:
        raise GeometryError(f"no stored configuration for even n={args.n}; "
                            "use --search")
    payload = {"command": "ngon", **gon.to_json()}
    _emit(payload, args.out)
    return 0


def cmd_tables(args):
    if args.which == "lambda":
        rows = lambda_table(args.d, args.nmax)
    else:
        rows = delta_table(args.d, args.nmax)
    lines = ["d,n,value,source,note"]
    for r in rows:
        lines.append(f"{r.d},{r.n},{r.value:.12g},{r.source},{r.note}")
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.out:
        _atomic_write(args.out, text)
    if args.plot:
        from .render import render_table

        render_table(rows, args.plot)
    return 0


def cmd_render(args):
    with open(args.input) as fh:
        result = json.load(fh)
    from .render import render_result

    render_result(result, args.out)
    sys.stdout.write(f"wrote {args.out}\n")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="widthbench",
        description="Inscribed and circumscribed polytope constructions for "
                    "convex bodies, with width/diameter guarantees.")
    sub = ap.add_subparsers(dest="command", required=True)

    def body_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--body", required=True, help="body JSON file")
        p.add_argument("--out", help="also write the result to this file")
        return p

    body_cmd("width", "minimal width and direction").set_defaults(fn=cmd_width)
    body_cmd("diameter", "diameter and achieving pair").set_defaults(
        fn=cmd_diameter)
    p = body_cmd("chord", "diametral chord in a direction")
    p.add_argument("--dir", required=True, help="direction, e.g. 1,0 or 0,0,1")
    p.set_defaults(fn=cmd_chord)

    p = sub.add_parser("lines", help="line family with certified radius")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--optimize", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=300)
    p.add_argument("--resolution", type=int, default=0,
                   help="re-certify at this sampling resolution")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_lines)

    p = body_cmd("inscribe", "inscribe a wide polytope with <= n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--optimize", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_inscribe)

    p = body_cmd("triangle", "inscribe a regular triangle of guaranteed width")
    p.set_defaults(fn=cmd_triangle)

    p = body_cmd("circumscribe",
                 "circumscribe a small-diameter polytope with <= n facets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eps", type=float, default=1e-3,
                   help="completion tolerance")
    p.add_argument("--resolution", type=int, default=1024,
                   help="completion boundary sampling resolution")
    p.add_argument("--optimize", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_circumscribe)

    p = sub.add_parser("ngon", help="widest known n-gon inscribed in the disk")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--search", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=2000)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_ngon)

    p = sub.add_parser("tables", help="lambda/delta bound tables as CSV")
    p.add_argument("--which", choices=("lambda", "delta"), required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--plot", help="also render the table as a figure")
    p.set_defaults(fn=cmd_tables)

    p = sub.add_parser("render", help="draw a result JSON to an image file")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_render)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except GeometryError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    except Exception as exc:  # numeric failure inside a construction
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
