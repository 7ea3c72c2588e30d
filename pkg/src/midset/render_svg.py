"""Deterministic SVG figures: the body, a reflection, the midpoint body, markers.

The viewport is derived from the joint bounding box of everything drawn,
with a 5% margin per axis.  Output depends only on the inputs, so identical
calls produce identical bytes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .geom import Body, Point

BODY_STYLE = 'fill="#c6dbef" stroke="#3182bd" stroke-width="1.5"'
REFLECTION_STYLE = 'fill="none" stroke="#de2d26" stroke-width="1.5" stroke-dasharray="6 4"'
ABODY_STYLE = 'fill="url(#hatch)" stroke="#31a354" stroke-width="1"'
MARKER_STYLE = 'fill="#756bb1" stroke="none"'


def _fmt(v: float) -> str:
    return f"{v:.6g}"


class _Viewport:
    def __init__(self, bodies: Sequence[Body], points: Sequence[Point], width: int):
        xs = [p.x for B in bodies for p in B.vertices] + [p.x for p in points]
        ys = [p.y for B in bodies for p in B.vertices] + [p.y for p in points]
        lo_x, hi_x = min(xs), max(xs)
        lo_y, hi_y = min(ys), max(ys)
        pad_x = (hi_x - lo_x) * Fraction(1, 20) or Fraction(1)
        pad_y = (hi_y - lo_y) * Fraction(1, 20) or Fraction(1)
        self.lo_x, self.lo_y = lo_x - pad_x, lo_y - pad_y
        self.span_x, self.span_y = (hi_x - lo_x) + 2 * pad_x, (hi_y - lo_y) + 2 * pad_y
        self.width = float(width)
        self.height = float(width * self.span_y / self.span_x)

    def map(self, p: Point) -> tuple[float, float]:
        x = float((p.x - self.lo_x) / self.span_x) * self.width
        y = self.height - float((p.y - self.lo_y) / self.span_y) * self.height
        return x, y

    def polygon_points(self, B: Body) -> str:
        return " ".join(",".join(map(_fmt, self.map(p))) for p in B.vertices)


def _body_element(vp: _Viewport, B: Body, cls: str, style: str) -> str:
    if B.kind == "polygon":
        return f'<polygon class="{cls}" points="{vp.polygon_points(B)}" {style}/>'
    if B.kind == "segment":
        (x1, y1), (x2, y2) = (vp.map(p) for p in B.vertices)
        stroke = style.replace('fill="#c6dbef" ', 'fill="none" ')
        return (
            f'<line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" {stroke}/>'
        )
    x, y = vp.map(B.vertices[0])
    return f'<circle class="{cls}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" {style}/>'


def render_svg(
    B: Body,
    *,
    reflections: Sequence[Body] = (),
    markers: Sequence[Point] = (),
    midpoint_body: Optional[Body] = None,
    width: int = 640,
) -> str:
    """Render the body with optional reflection outlines, hatched midpoint body,
    and certificate markers."""
    bodies = [B, *reflections] + ([midpoint_body] if midpoint_body is not None else [])
    vp = _Viewport(bodies, markers, width)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(vp.width)}" '
        f'height="{_fmt(vp.height)}" viewBox="0 0 {_fmt(vp.width)} {_fmt(vp.height)}">',
        "<defs>",
        '<pattern id="hatch" width="6" height="6" patternTransform="rotate(45)" '
        'patternUnits="userSpaceOnUse">'
        '<line x1="0" y1="0" x2="0" y2="6" stroke="#31a354" stroke-width="1"/>'
        "</pattern>",
        "</defs>",
        _body_element(vp, B, "body", BODY_STYLE),
    ]
    if midpoint_body is not None:
        lines.append(_body_element(vp, midpoint_body, "a-body", ABODY_STYLE))
    for R in reflections:
        lines.append(_body_element(vp, R, "reflection", REFLECTION_STYLE))
    for p in markers:
        x, y = vp.map(p)
        lines.append(
            f'<circle class="certificate" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" {MARKER_STYLE}/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
