"""Middle lines and middle sets, antipodal face pairs, and the midpoint body.

For a direction u the middle line is the average of the two parallel
supporting lines with normals u and -u, and the middle set is the averaged
face pair Z(u) = (F(B,u) + F(B,-u)) / 2, a point or a segment on the middle
line.  For polygons the circle of directions splits into finitely many
antipodal events on which the face pair is constant; the midpoint body is
the hull of all middle sets and is assembled from that event structure.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geom import (
    ANGULAR_KEY,
    HALF,
    Body,
    Direction,
    Face,
    GeometryError,
    Line,
    Point,
    face,
    hull,
    midpoint,
    reflect,
    support,
)


def p_value(B: Body, n: Direction) -> Fraction:
    """Half the support gap (h_B(n) - h_B(-n)) / 2; homogeneous in the ray n."""
    return (support(B, n) - support(B, -n)) / 2


def middle_line(B: Body, n: Direction) -> Line:
    """Middle line of B with normal n; equals middle_line(B, -n) as a set."""
    return Line(n, p_value(B, n))


@dataclass(frozen=True)
class MiddleSegment:
    """Middle set Z(u) = [s, t] together with its carrier middle line.

    Endpoint labels follow the one-sided support derivatives: s averages the
    trailing face endpoint (left derivative), t the leading one (right
    derivative).  When the face at u is the segment, t - s is a nonnegative
    multiple of u'; when the face at -u is, it is a nonpositive one.
    """

    carrier: Line
    s: Point
    t: Point

    @property
    def is_point(self) -> bool:
        return self.s == self.t

    def endpoints(self) -> frozenset[Point]:
        return frozenset((self.s, self.t))

    def contains(self, p: Point) -> bool:
        d = self.t - self.s
        if d.is_zero():
            return p == self.s
        return d.cross(p - self.s) == 0 and 0 <= d.dot(p - self.s) <= d.dot(d)


def middle_set(B: Body, n: Direction) -> MiddleSegment:
    """Middle set of a 2-dimensional body in direction n.

    Refuses directions with a parallel edge pair (both faces segments);
    those are handled by summand decomposition, not by this operation.
    """
    if B.dim != 2:
        raise GeometryError("middle_set requires a 2-dimensional body")
    fp, fn = face(B, n), face(B, -n)
    if not fp.is_point and not fn.is_point:
        raise GeometryError(
            f"parallel edge pair with normal {n.canonical()}; decompose first"
        )
    carrier = middle_line(B, n)
    if fn.is_point:
        s = HALF * (fp.a + fn.a)
        t = HALF * (fp.b + fn.a)
    else:
        s = HALF * (fn.a + fp.a)
        t = HALF * (fn.b + fp.a)
    return MiddleSegment(carrier, s, t)


@dataclass(frozen=True)
class AntipodalEvent:
    """A closed arc of directions with a constant antipodal face pair.

    For every ray strictly inside [lo, hi], face(P, n) == face_pos and
    face(P, -n) == face_neg.  Boundary events have lo == hi (an edge normal
    modulo sign); arc events lie strictly between consecutive edge normals,
    where both faces are vertices.  The event list covers the half-circle of
    ray classes; the antipodal ray reuses the same event with faces swapped.
    """

    lo: Direction
    hi: Direction
    face_pos: Face
    face_neg: Face

    @property
    def is_boundary(self) -> bool:
        return self.lo == self.hi

    def representative(self) -> Direction:
        if self.is_boundary:
            return self.lo
        a, b = self.lo.canonical(), self.hi.canonical()
        return Direction(a.dx + b.dx, a.dy + b.dy)

    def strictly_contains(self, n: Direction) -> bool:
        """True iff n lies strictly between lo and hi (arc width < pi)."""
        return self.lo.cross(n) > 0 and n.cross(self.hi) > 0


@functools.lru_cache(maxsize=512)
def antipodal_events(P: Body) -> tuple[AntipodalEvent, ...]:
    """Rotating-calipers stratification of directions for a polygon.

    Event boundaries are exactly the outward edge normals of P and their
    negatives; 2m events for m edge-normal classes modulo sign, ordered CCW
    starting at the smallest class representative.  Memoized per body (the
    grid scans replay the same structure for every candidate point).
    """
    if P.kind != "polygon":
        raise GeometryError("antipodal_events requires a polygon")
    rays = sorted({n.axis_rep() for n in P.edge_normals()}, key=ANGULAR_KEY)
    events: list[AntipodalEvent] = []
    m = len(rays)
    for i, r in enumerate(rays):
        events.append(AntipodalEvent(r, r, face(P, r), face(P, -r)))
        nxt = rays[i + 1] if i + 1 < m else -rays[0]
        a, b = r.canonical(), nxt.canonical()
        w = Direction(a.dx + b.dx, a.dy + b.dy)
        fp, fn = face(P, w), face(P, -w)
        assert fp.is_point and fn.is_point, "arc interior faces must be vertices"
        events.append(AntipodalEvent(r, nxt, fp, fn))
    return tuple(events)


def a_body(P: Body) -> Body:
    """Midpoint body: the hull of all middle sets of P.

    Requires a polygon with no parallel edge pair.  Equals the hull of the
    antipodal vertex-pair midpoints; edge-vertex events contribute segments
    whose endpoints are midpoints from the adjacent arcs.
    """
    if P.kind != "polygon":
        raise GeometryError("a_body requires a polygon")
    if has_parallel_edges(P) is not None:
        raise GeometryError("a_body requires a polygon without parallel edges")
    pts = []
    for ev in antipodal_events(P):
        for x in ev.face_pos.points():
            for y in ev.face_neg.points():
                pts.append(midpoint(x, y))
    return hull(pts)


def exposed_points(B: Body) -> list[Point]:
    """Exposed points of a polytope: its vertices (segment endpoints, the point)."""
    return list(B.vertices)


@dataclass(frozen=True)
class ParallelEdges:
    """A parallel edge pair: both faces at +-normal are segments."""

    normal: Direction
    face_pos: Face
    face_neg: Face


@functools.lru_cache(maxsize=512)
def parallel_edge_directions(P: Body) -> tuple[Direction, ...]:
    """Edge-direction class representatives with a parallel pair, in angular order."""
    if P.kind != "polygon":
        raise GeometryError("parallel edge scan requires a polygon")
    seen: dict[tuple[int, int], int] = {}
    for a, b in P.edges():
        d = Direction((b - a).x, (b - a).y).axis_rep()
        seen[d.canonical_tuple] = seen.get(d.canonical_tuple, 0) + 1
    pairs = [Direction(*k) for k, c in seen.items() if c == 2]
    return tuple(sorted(pairs, key=ANGULAR_KEY))


def has_parallel_edges(P: Body) -> Optional[ParallelEdges]:
    """The smallest-direction parallel edge pair of a polygon, if one exists."""
    dirs = parallel_edge_directions(P)
    if not dirs:
        return None
    n = dirs[0].perp().axis_rep()
    return ParallelEdges(n, face(P, n), face(P, -n))


@dataclass(frozen=True)
class SymmetryResult:
    symmetric: bool
    center: Optional[Point] = None


def is_centrally_symmetric(B: Body) -> SymmetryResult:
    """Detect central symmetry; for polygons, opposite vertices share a midpoint."""
    if B.kind == "point":
        return SymmetryResult(True, B.vertices[0])
    if B.kind == "segment":
        return SymmetryResult(True, midpoint(*B.vertices))
    vs = B.vertices
    n = len(vs)
    if n % 2 != 0:
        return SymmetryResult(False)
    half = n // 2
    c = midpoint(vs[0], vs[half])
    for i in range(1, half):
        if midpoint(vs[i], vs[i + half]) != c:
            return SymmetryResult(False)
    assert reflect(B, c) == B
    return SymmetryResult(True, c)
