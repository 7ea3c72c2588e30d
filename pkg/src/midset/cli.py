"""Command-line surface: generation, pipelines, verification campaigns, figures.

Exit codes: 0 ok, 1 property violation (a failed campaign or a negative
verify verdict), 2 input error.  ``--format records`` switches the output
to JSON lines for machine consumption.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import random
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import bodyio
from .campaigns import SUITES, run_suite
from .convexity import (
    is_convexity_point_char,
    is_convexity_point_direct,
    middle_intercept_profile,
    theorem_points,
    witness_nonconvexity,
)
from .decompose import decompose
from .generate import (
    GENERATOR_ID,
    random_no_parallel_polygon,
    random_polygon,
    random_symmetric_polygon,
    with_summands,
)
from .geom import Body, GeometryError, Point, affine_dim, reflect
from .middle import (
    a_body,
    antipodal_events,
    has_parallel_edges,
    is_centrally_symmetric,
)
from .render_svg import render_svg
from .smooth import (
    TOLERANCES,
    SmoothBody,
    a_body_approx,
    fd_check_lemma4,
    symmetry_residual,
    z_curve,
)

OK, VIOLATION, INPUT_ERROR = 0, 1, 2


class CliError(Exception):
    """Input-level failure; maps to exit code 2."""


def _parse_point(text: str) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        raise CliError(f"point must be 'x,y', got {text!r}")
    try:
        return Point(Fraction(parts[0].strip()), Fraction(parts[1].strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"invalid point {text!r}: {exc}") from exc


def _read_input(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    try:
        return bodyio.loads_any(text), text
    except bodyio.FormatError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _read_body(path: str) -> tuple[Body, str]:
    obj, text = _read_input(path)
    if not isinstance(obj, Body):
        raise CliError(f"{path}: expected an exact body file, got a smooth body")
    return obj, text


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _coord(v: Fraction):
    return bodyio.coord_to_json(v)


def _point_obj(p: Point) -> list:
    return [_coord(p.x), _coord(p.y)]


def _direction_obj(d) -> list:
    return list(d.canonical_tuple)


def _certificates_obj(certs) -> dict:
    pts = [c.point for c in certs]
    return {
        "certificates": [
            {
                "z": _point_obj(c.point),
                "method": c.method,
                "witnesses": [_direction_obj(w) for w in c.witnesses],
                "degenerate": c.degenerate,
            }
            for c in certs
        ],
        "count": len(certs),
        "affinely_independent": affine_dim(pts) == 2,
    }


def cmd_gen(args) -> int:
    if args.n < 3:
        raise CliError("n must be at least 3")
    rng = random.Random(args.seed)
    if args.symmetric:
        B, _ = random_symmetric_polygon(rng, args.n)
    elif args.no_parallel:
        B = random_no_parallel_polygon(rng, args.n)
    else:
        B = random_polygon(rng, args.n)
    if args.with_summands:
        B = with_summands(rng, B, args.with_summands)
    _emit(bodyio.dumps_body(B), args.output)
    return OK


def cmd_info(args) -> int:
    obj, text = _read_input(args.file)
    if isinstance(obj, SmoothBody):
        info = {
            "kind": "smooth",
            "harmonics": len(obj.harmonics),
            "min_curvature": obj.min_curvature,
            "symmetry_residual": symmetry_residual(obj),
        }
        if args.format == "records":
            _emit(json.dumps(info) + "\n", None)
        else:
            for k, v in info.items():
                print(f"{k}: {v}")
        return OK
    B = obj
    area2 = sum(a.cross(b) for a, b in B.edges())
    pair = has_parallel_edges(B) if B.kind == "polygon" else None
    sym = is_centrally_symmetric(B)
    info = {
        "kind": B.kind,
        "vertices": len(B.vertices),
        "area": str(area2 / 2),
        "parallel_edges": _direction_obj(pair.normal) if pair else None,
        "centrally_symmetric": sym.symmetric,
        "center": _point_obj(sym.center) if sym.symmetric else None,
        "digest": _digest(text),
    }
    if args.events and B.kind == "polygon":
        from .geom import hull, midpoint

        def middle_obj(ev):
            # the middle set in the shared body format; absent on a
            # parallel-edge direction (both faces segments)
            if not ev.face_pos.is_point and not ev.face_neg.is_point:
                return None
            pts = [
                midpoint(x, y)
                for x in ev.face_pos.points()
                for y in ev.face_neg.points()
            ]
            return bodyio.body_to_obj(hull(pts))

        info["events"] = [
            {
                "arc": [_direction_obj(ev.lo), _direction_obj(ev.hi)],
                "face_pos": [_point_obj(p) for p in ev.face_pos.points()],
                "face_neg": [_point_obj(p) for p in ev.face_neg.points()],
                "middle_set": middle_obj(ev),
            }
            for ev in antipodal_events(B)
        ]
    if args.format == "records":
        _emit(json.dumps(info) + "\n", None)
    else:
        for k, v in info.items():
            if k != "events":
                print(f"{k}: {v}")
        if "events" in info:
            for ev in info["events"]:
                print(f"event arc={ev['arc']} pos={ev['face_pos']} neg={ev['face_neg']}")
    return OK


def cmd_points(args) -> int:
    B, _ = _read_body(args.file)
    certs = theorem_points(B)
    doc = _certificates_obj(certs)
    if args.format == "records":
        _emit(json.dumps(doc) + "\n", args.output)
    else:
        for c in doc["certificates"]:
            extra = " (degenerate case)" if c["degenerate"] else ""
            print(f"z = {tuple(c['z'])}  method = {c['method']}{extra}  witnesses = {c['witnesses']}")
        print(f"affinely independent: {doc['affinely_independent']}")
    return OK


def cmd_verify(args) -> int:
    B, _ = _read_body(args.file)
    z = _parse_point(args.z)
    direct = is_convexity_point_direct(B, z)
    char_verdict = None
    witnesses: list = []
    if B.kind == "polygon" and has_parallel_edges(B) is None:
        char_ok, dirs = is_convexity_point_char(B, z)
        char_verdict = char_ok
        witnesses = [_direction_obj(d) for d in dirs]
        if char_ok != direct:
            print("INTERNAL DISAGREEMENT between direct and characterization tests",
                  file=sys.stderr)
            return VIOLATION
    witness_point = None
    if not direct:
        w = witness_nonconvexity(B, reflect(B, z))
        witness_point = _point_obj(w) if w is not None else None
    doc = {
        "z": _point_obj(z),
        "direct": direct,
        "characterization": char_verdict,
        "witnesses": witnesses,
        "nonconvexity_witness": witness_point,
    }
    if args.format == "records":
        _emit(json.dumps(doc) + "\n", None)
    else:
        print(f"direct: {direct}")
        if char_verdict is None:
            print("characterization: n/a: parallel edges" if B.kind == "polygon"
                  else "characterization: n/a: not a polygon")
        else:
            print(f"characterization: {char_verdict}")
            print(f"witnesses: {witnesses}")
        if witness_point is not None:
            print(f"nonconvexity witness: {tuple(witness_point)}")
    return OK if direct else VIOLATION


def cmd_a_body(args) -> int:
    obj, _ = _read_input(args.file)
    if isinstance(obj, SmoothBody):
        ring = a_body_approx(obj, args.samples)
        doc = {"type": "float-polygon", "vertices": [[x, y] for x, y in ring]}
        _emit(json.dumps(doc) + "\n", args.output)
        return OK
    try:
        A = a_body(obj)
    except GeometryError as exc:
        raise CliError(str(exc)) from exc
    _emit(bodyio.dumps_body(A), args.output)
    return OK


def cmd_decompose(args) -> int:
    B, _ = _read_body(args.file)
    D = decompose(B)
    doc = {
        "core": bodyio.body_to_obj(D.core),
        "summands": [bodyio.body_to_obj(S) for S in D.summands],
        "trace": [
            {"direction": _direction_obj(st.direction), "length": _coord(st.length)}
            for st in D.trace
        ],
    }
    _emit(json.dumps(doc) + "\n", args.output)
    return OK


def cmd_profile(args) -> int:
    obj, _ = _read_input(args.file)
    if isinstance(obj, SmoothBody):
        return _smooth_profile(obj, args)
    B = obj
    try:
        targets = [_parse_point(args.point)] if args.point else list(a_body(B).vertices)
        records = []
        for z in targets:
            prof = middle_intercept_profile(B, z, args.samples)
            records.append(
                {
                    "frame": {
                        "origin": _point_obj(prof.origin),
                        "e1": _direction_obj(prof.e1),
                        "e2": _direction_obj(prof.e2),
                    },
                    "samples": [[phi, fv] for phi, fv in prof.samples],
                    "zero_component": list(prof.zero_component)
                    if prof.zero_component
                    else None,
                    "violations": prof.monotone_violations,
                }
            )
    except GeometryError as exc:
        raise CliError(str(exc)) from exc
    if args.format == "records":
        _emit("".join(json.dumps(r) + "\n" for r in records), args.output)
    else:
        for r in records:
            print(
                f"origin={r['frame']['origin']} e2={r['frame']['e2']} "
                f"zero={r['zero_component']} violations={r['violations']}"
            )
    return OK


def _smooth_profile(SB: SmoothBody, args) -> int:
    """Derivative-identity sweep: tabular {phi, p, p', residual} records.

    Exit code 1 when any central-difference residual exceeds the tolerance
    (--tolerance, defaulting to the numeric derivative tolerance).
    """
    tol = args.tolerance if args.tolerance is not None else TOLERANCES.derivative
    step = 1e-4
    worst = 0.0
    records = []
    for i in range(args.samples):
        phi = 2 * math.pi * i / args.samples
        zs = z_curve(SB, phi)
        fd = fd_check_lemma4(SB, phi, step)
        worst = max(worst, fd.central)
        records.append(
            {"phi": phi, "p": zs.p, "p_prime": zs.p_prime, "residual": fd.central}
        )
    if args.format == "records":
        _emit("".join(json.dumps(r) + "\n" for r in records), args.output)
    else:
        print(f"samples: {len(records)}  step: {step}")
        print(f"worst residual: {worst:.3g}  tolerance: {tol:.3g}")
    return OK if worst <= tol else VIOLATION


def cmd_campaign(args) -> int:
    if args.suite not in SUITES:
        raise CliError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    res = run_suite(args.suite, args.count, args.seed)
    report = {
        "command": "campaign",
        "suite": res.suite,
        "count": res.count,
        "seed": res.seed,
        "digest": _digest(f"{args.suite}:{args.count}:{args.seed}"),
        "generator": GENERATOR_ID,
        "passed": res.passed,
        "failed": res.failed,
        "failures": res.failures,
        "elapsed": round(time.perf_counter() - start, 3),
    }
    if args.format == "records":
        _emit(json.dumps(report) + "\n", None)
    else:
        print(
            f"suite {res.suite}: {res.passed}/{res.count} passed "
            f"({report['elapsed']} s, seed {res.seed}, {GENERATOR_ID})"
        )
        for f in res.failures:
            print(f"  FAIL {f}")
    return OK if res.ok else VIOLATION


def cmd_render(args) -> int:
    B, _ = _read_body(args.file)
    markers = []
    refl = []
    if args.point:
        z = _parse_point(args.point)
        markers.append(z)
        refl.append(reflect(B, z))
    mid = None
    if args.a_body:
        try:
            mid = a_body(B)
        except GeometryError as exc:
            raise CliError(str(exc)) from exc
    svg = render_svg(B, reflections=refl, markers=markers, midpoint_body=mid)
    _emit(svg, args.output)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="midset",
        description="Convexity points of planar convex bodies via middle sets.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    common.add_argument("--format", choices=("text", "records"), default="text")
    common.add_argument("--tolerance", type=float, default=None,
                        help="numeric-mode tolerance override (reserved)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=type(parser))

    def add_parser(name: str, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("gen", help="generate a random body file")
    p.add_argument("n", type=int, help="number of sample points (>= 3)")
    p.add_argument("--no-parallel", action="store_true")
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--with-summands", type=int, default=0, metavar="K")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = add_parser("info", help="summarize a body file")
    p.add_argument("file")
    p.add_argument("--events", action="store_true", help="include antipodal events")
    p.set_defaults(func=cmd_info)

    p = add_parser("points", help="certified convexity points")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_points)

    p = add_parser("verify", help="test one candidate point")
    p.add_argument("file")
    p.add_argument("z", help="candidate point as 'x,y' (rationals allowed)")
    p.set_defaults(func=cmd_verify)

    p = add_parser("a-body", help="midpoint body (exact or sampled)")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=360, help="smooth mode sweep size")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_a_body)

    p = add_parser("decompose", help="parallel-edge summand decomposition")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_decompose)

    p = add_parser("profile", help="middle-line intercept profile")
    p.add_argument("file")
    p.add_argument("--point", help="exposed point as 'x,y' (default: all)")
    p.add_argument("--samples", type=int, default=999)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_profile)

    p = add_parser("campaign", help="run a seeded property suite")
    p.add_argument("count", type=int)
    p.add_argument("suite", help="one of: " + ", ".join(SUITES))
    p.set_defaults(func=cmd_campaign)

    p = add_parser("render", help="emit an SVG figure")
    p.add_argument("file")
    p.add_argument("--point", help="candidate point: draws 2z-K and a marker")
    p.add_argument("--a-body", action="store_true", help="overlay the midpoint body")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code not in (0, None) else OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (bodyio.FormatError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except BrokenPipeError:
        # the reader went away (e.g. piped into head); exit quietly
        import os

        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return OK


if __name__ == "__main__":
    sys.exit(main())
