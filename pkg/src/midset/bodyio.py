"""Shared file formats for exact bodies and smooth harmonic bodies.

An exact body is a JSON object {"type": point|segment|polygon, "vertices":
[[x, y], ...]} where a coordinate is a JSON integer or a lowest-terms
"p/q" string.  Emission is canonical (CCW, lexicographically smallest
vertex first, lowest-terms strings), so parse -> emit -> parse is the
identity on every emitted file.  A smooth body is {"harmonics":
[[k, a_k, b_k], ...]} with float coefficients.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Union

from .geom import Body, GeometryError, Point
from .smooth import SmoothBody, SmoothBodyError, make_smooth_body

FRACTION_RE = re.compile(r"^-?\d+/[1-9]\d*$")


class FormatError(ValueError):
    """Malformed body file content."""


def coord_to_json(v: Fraction) -> Union[int, str]:
    return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def coord_from_json(v: Any) -> Fraction:
    if isinstance(v, bool):
        raise FormatError(f"coordinate must be an integer or 'p/q' string, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str) and FRACTION_RE.match(v):
        return Fraction(v)
    raise FormatError(f"coordinate must be an integer or 'p/q' string, got {v!r}")


def body_to_obj(B: Body) -> dict:
    return {
        "type": B.kind,
        "vertices": [[coord_to_json(p.x), coord_to_json(p.y)] for p in B.vertices],
    }


def body_from_obj(obj: Any) -> Body:
    if not isinstance(obj, dict):
        raise FormatError("body file must be a JSON object")
    kind = obj.get("type")
    if kind not in ("point", "segment", "polygon"):
        raise FormatError(f"unknown body type {kind!r}")
    raw = obj.get("vertices")
    if not isinstance(raw, list) or not raw:
        raise FormatError("missing or empty vertex list")
    pts = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError(f"vertex {i} is not an [x, y] pair")
        pts.append(Point(coord_from_json(pair[0]), coord_from_json(pair[1])))
    try:
        if kind == "point":
            if len(pts) != 1:
                raise FormatError("point body needs exactly one vertex")
            return Body.point(pts[0])
        if kind == "segment":
            if len(pts) != 2:
                raise FormatError("segment body needs exactly two vertices")
            return Body.segment(*pts)
        return Body.polygon(pts)
    except GeometryError as exc:
        raise FormatError(str(exc)) from exc


def dumps_body(B: Body) -> str:
    return json.dumps(body_to_obj(B)) + "\n"


def loads_body(text: str) -> Body:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return body_from_obj(obj)


def smooth_to_obj(SB: SmoothBody) -> dict:
    rows = [[0, SB.a0, 0.0]]
    rows.extend([k, a, b] for k, a, b in SB.harmonics)
    return {"harmonics": rows}


def smooth_from_obj(obj: Any) -> SmoothBody:
    if not isinstance(obj, dict):
        raise FormatError("smooth body file must be a JSON object")
    rows = obj.get("harmonics")
    if not isinstance(rows, list) or not rows:
        raise FormatError("missing or empty harmonics list")
    coeffs = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 3:
            raise FormatError(f"harmonic row {i} is not [k, a, b]")
        k, a, b = row
        if not isinstance(k, int) or isinstance(k, bool) or k < 0:
            raise FormatError(f"harmonic row {i} has invalid order {k!r}")
        if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in (a, b)):
            raise FormatError(f"harmonic row {i} has non-numeric coefficients")
        coeffs.append((k, float(a), float(b)))
    try:
        return make_smooth_body(coeffs)
    except (SmoothBodyError, ValueError) as exc:
        raise FormatError(str(exc)) from exc


def dumps_smooth(SB: SmoothBody) -> str:
    return json.dumps(smooth_to_obj(SB)) + "\n"


def loads_any(text: str) -> Union[Body, SmoothBody]:
    """Parse either file schema, keyed on the presence of "harmonics"."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if isinstance(obj, dict) and "harmonics" in obj:
        return smooth_from_obj(obj)
    return body_from_obj(obj)
