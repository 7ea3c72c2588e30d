"""Exact rational primitives for planar convex bodies.

Every coordinate is an arbitrary-precision rational (``fractions.Fraction``),
every predicate is exact, and every value is immutable.  A ``Body`` is a
point, a segment, or a strictly convex CCW polygon in canonical form: no
collinear vertex triples, lexicographically smallest vertex first.

Directions are rational rays, never normalized to unit length.  Support
values and line offsets are positively homogeneous in the ray, so formulas
stated for unit vectors hold on rays as well.  The quarter turn ``u -> u'``
is the counterclockwise rotation (dx, dy) -> (-dy, dx) throughout.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Optional, Union

RatLike = Union[int, Fraction]


class GeometryError(ValueError):
    """Invalid geometric input or a violated operation precondition."""


def _rat(v: RatLike) -> Fraction:
    if isinstance(v, float):
        raise GeometryError(f"exact mode requires int or Fraction, got float {v!r}")
    return Fraction(v)


HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class Point:
    """Point of the rational plane; also used as a displacement vector."""

    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _rat(self.x))
        object.__setattr__(self, "y", _rat(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def __rmul__(self, k: RatLike) -> "Point":
        k = _rat(k)
        return Point(k * self.x, k * self.y)

    def dot(self, other: "Point") -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> Fraction:
        return self.x * other.y - self.y * other.x

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


ORIGIN = Point(0, 0)


def midpoint(a: Point, b: Point) -> Point:
    return HALF * (a + b)


def orient(a: Point, b: Point, c: Point) -> Fraction:
    """Twice the signed area of (a, b, c); positive iff the turn is CCW."""
    return (b - a).cross(c - a)


@dataclass(frozen=True, eq=False)
class Direction:
    """Nonzero rational ray.

    Components are kept exactly as given (no normalization), so dot products
    against a Direction are positively homogeneous in it.  Two Directions
    compare equal iff one is a positive scalar multiple of the other; the
    canonical class representative is the coprime integer vector obtained by
    dividing out the positive gcd.
    """

    dx: Fraction
    dy: Fraction

    def __post_init__(self) -> None:
        dx, dy = _rat(self.dx), _rat(self.dy)
        if dx == 0 and dy == 0:
            raise GeometryError("zero direction")
        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "dy", dy)

    @functools.cached_property
    def canonical_tuple(self) -> tuple[int, int]:
        scale = lcm(self.dx.denominator, self.dy.denominator)
        ix, iy = int(self.dx * scale), int(self.dy * scale)
        g = gcd(abs(ix), abs(iy))
        return (ix // g, iy // g)

    def canonical(self) -> "Direction":
        cx, cy = self.canonical_tuple
        return Direction(cx, cy)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Direction):
            return NotImplemented
        return self.canonical_tuple == other.canonical_tuple

    def __hash__(self) -> int:
        return hash(self.canonical_tuple)

    def __neg__(self) -> "Direction":
        return Direction(-self.dx, -self.dy)

    def perp(self) -> "Direction":
        """Counterclockwise quarter turn u -> u'."""
        return Direction(-self.dy, self.dx)

    def dot(self, p: Point) -> Fraction:
        return self.dx * p.x + self.dy * p.y

    def cross(self, other: "Direction") -> Fraction:
        return self.dx * other.dy - self.dy * other.dx

    def as_point(self) -> Point:
        return Point(self.dx, self.dy)

    @property
    def upper_half(self) -> bool:
        """True iff the ray's angle lies in [0, pi)."""
        return self.dy > 0 or (self.dy == 0 and self.dx > 0)

    def axis_rep(self) -> "Direction":
        """Canonical representative of the ray modulo sign (angle in [0, pi))."""
        c = self.canonical()
        return c if c.upper_half else -c

    def __str__(self) -> str:
        return "({}, {})".format(*self.canonical_tuple)


def ccw_compare(a: Direction, b: Direction) -> int:
    """Total circular order on rays by angle, counterclockwise from (1, 0)."""
    ha = 0 if a.upper_half else 1
    hb = 0 if b.upper_half else 1
    if ha != hb:
        return -1 if ha < hb else 1
    c = a.cross(b)
    return 0 if c == 0 else (-1 if c > 0 else 1)


ANGULAR_KEY = functools.cmp_to_key(ccw_compare)


@dataclass(frozen=True)
class Line:
    """The line {x : <x, normal> = offset}, stored with canonical normal."""

    normal: Direction
    offset: Fraction

    def __post_init__(self) -> None:
        n = self.normal
        offset = _rat(self.offset)
        cx, cy = n.canonical_tuple
        if n.dx != cx or n.dy != cy:
            # rescale the pair so the stored normal is the primitive ray
            k = n.dx / cx if cx != 0 else n.dy / cy
            n = n.canonical()
            offset = offset / k
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", offset)

    def contains(self, p: Point) -> bool:
        return self.normal.dot(p) == self.offset

    def same_line(self, other: "Line") -> bool:
        """Set equality, ignoring normal orientation."""
        if self.normal == other.normal:
            return self.offset == other.offset
        if self.normal == -other.normal:
            return self.offset == -other.offset
        return False


@dataclass(frozen=True)
class Face:
    """Support set F(B, n): a vertex (a == b) or an edge with b - a along n'."""

    a: Point
    b: Point

    @property
    def is_point(self) -> bool:
        return self.a == self.b

    def points(self) -> tuple[Point, ...]:
        return (self.a,) if self.is_point else (self.a, self.b)

    def translate(self, v: Point) -> "Face":
        return Face(self.a + v, self.b + v)


@dataclass(frozen=True)
class Body:
    """A planar convex body: point, segment, or strictly convex CCW polygon.

    Canonical form: segment endpoints in lexicographic order; polygon ring
    CCW with no collinear triple, starting at the lexicographically smallest
    vertex.  Build instances through :func:`hull` or the class constructors,
    which validate and canonicalize.
    """

    kind: str
    vertices: tuple[Point, ...]

    @staticmethod
    def point(p: Point) -> "Body":
        return Body("point", (p,))

    @staticmethod
    def segment(p: Point, q: Point) -> "Body":
        if p == q:
            raise GeometryError("degenerate segment")
        return Body("segment", (p, q) if p < q else (q, p))

    @staticmethod
    def polygon(ring: Iterable[Point]) -> "Body":
        """Validate a strictly convex CCW ring and canonicalize its rotation."""
        vs = list(ring)
        if len(vs) < 3:
            raise GeometryError("polygon needs at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise GeometryError("repeated polygon vertex")
        h = hull(vs)
        if h.kind != "polygon" or len(h.vertices) != len(vs):
            raise GeometryError("vertices are not in strictly convex position")
        k = vs.index(min(vs))
        if tuple(vs[k:] + vs[:k]) != h.vertices:
            raise GeometryError("vertex list is not a CCW convex ring")
        return h

    @property
    def dim(self) -> int:
        return {"point": 0, "segment": 1, "polygon": 2}[self.kind]

    def edges(self) -> Iterator[tuple[Point, Point]]:
        """Boundary edges in CCW order (polygon only)."""
        if self.kind != "polygon":
            return
        vs = self.vertices
        for i, v in enumerate(vs):
            yield v, vs[(i + 1) % len(vs)]

    def edge_normals(self) -> Iterator[Direction]:
        """Outward edge normals in CCW order."""
        for a, b in self.edges():
            d = b - a
            yield Direction(d.y, -d.x)

    def translate(self, v: Point) -> "Body":
        return Body(self.kind, tuple(p + v for p in self.vertices))

    def scale(self, k: RatLike) -> "Body":
        k = _rat(k)
        if k <= 0:
            raise GeometryError("scale factor must be positive")
        return Body(self.kind, tuple(k * p for p in self.vertices))

    def bounding_box(self) -> tuple[Point, Point]:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return Point(min(xs), min(ys)), Point(max(xs), max(ys))


def hull(points: Iterable[Point]) -> Body:
    """Convex hull in canonical Body form.

    Collinear and repeated input points are dropped; the result degrades to
    a segment or point as the affine dimension requires.
    """
    pts = sorted(set(points))
    if not pts:
        raise GeometryError("hull of empty point set")
    if len(pts) == 1:
        return Body.point(pts[0])
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and (lower[-1] - lower[-2]).cross(p - lower[-1]) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and (upper[-1] - upper[-2]).cross(p - upper[-1]) <= 0:
            upper.pop()
        upper.append(p)
    if len(lower) == 2 and len(upper) == 2:
        return Body.segment(pts[0], pts[-1])
    ring = tuple(lower[:-1] + upper[:-1])
    # monotone chain starts at the lexicographic minimum, already canonical
    return Body("polygon", ring)


def support(B: Body, n: Direction) -> Fraction:
    """Support value h_B(n) = max over vertices of <v, n> (ray, unnormalized)."""
    return max(n.dot(v) for v in B.vertices)


def face(B: Body, n: Direction) -> Face:
    """Face F(B, n): all support maximizers, segment endpoints ordered along n'."""
    best = support(B, n)
    hits = [v for v in B.vertices if n.dot(v) == best]
    if len(hits) == 1:
        return Face(hits[0], hits[0])
    assert len(hits) == 2, "canonical body has at most two support maximizers"
    u = n.perp()
    a, b = hits
    if u.dot(b - a) < 0:
        a, b = b, a
    return Face(a, b)


def minkowski_sum(B1: Body, B2: Body) -> Body:
    """Exact Minkowski sum; satisfies h_{B1+B2} = h_{B1} + h_{B2}."""
    return hull([v + w for v in B1.vertices for w in B2.vertices])


def reflect(B: Body, z: Point) -> Body:
    """Point reflection x -> 2z - x of the body, in canonical form."""
    two_z = z + z
    ring = [two_z - v for v in B.vertices]
    if B.kind != "polygon":
        return Body.point(ring[0]) if B.kind == "point" else Body.segment(*ring)
    # a point reflection is a half turn, so the ring stays CCW
    k = ring.index(min(ring))
    return Body("polygon", tuple(ring[k:] + ring[:k]))


def contains(B: Body, p: Point) -> bool:
    """Exact closed-set membership."""
    if B.kind == "point":
        return p == B.vertices[0]
    if B.kind == "segment":
        a, b = B.vertices
        d = b - a
        return d.cross(p - a) == 0 and 0 <= d.dot(p - a) <= d.dot(d)
    return all(orient(a, b, p) >= 0 for a, b in B.edges())


def affine_dim(points: Iterable[Point]) -> int:
    """Affine dimension (0, 1, or 2) of a nonempty point set."""
    pts = list(points)
    if not pts:
        raise GeometryError("affine_dim of empty point set")
    base = pts[0]
    span: Optional[Point] = None
    for p in pts[1:]:
        v = p - base
        if v.is_zero():
            continue
        if span is None:
            span = v
        elif span.cross(v) != 0:
            return 2
    return 0 if span is None else 1


def _int_hull_ring(pts: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Monotone chain on integer pairs; CCW ring, or 1-2 points if degenerate."""
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts
    lower: list[tuple[int, int]] = []
    for px, py in pts:
        while (
            len(lower) >= 2
            and (lower[-1][0] - lower[-2][0]) * (py - lower[-1][1])
            - (lower[-1][1] - lower[-2][1]) * (px - lower[-1][0]) <= 0
        ):
            lower.pop()
        lower.append((px, py))
    upper: list[tuple[int, int]] = []
    for px, py in reversed(pts):
        while (
            len(upper) >= 2
            and (upper[-1][0] - upper[-2][0]) * (py - upper[-1][1])
            - (upper[-1][1] - upper[-2][1]) * (px - upper[-1][0]) <= 0
        ):
            upper.pop()
        upper.append((px, py))
    if len(lower) == 2 and len(upper) == 2:
        return [pts[0], pts[-1]]
    return lower[:-1] + upper[:-1]


def _gap_numerator(intervals: list[tuple[int, int]], span: int) -> Optional[int]:
    """Twice the parameter numerator of a gap midpoint on [0, span], if any."""
    reach = 0
    for lo, hi in sorted(intervals):
        if lo > reach:
            return lo + reach
        reach = max(reach, hi)
    return span + reach if reach < span else None


def uncovered_hull_point(B1: Body, B2: Body) -> Optional[Point]:
    """A point of bd conv(B1 ∪ B2) lying in neither body, or None if covered.

    The union of two convex bodies is convex exactly when every boundary
    point of its convex hull belongs to one of the bodies, so a None result
    certifies convexity of the union.  Each hull edge is compared against
    the faces of both bodies in the edge's outward normal; the cover check
    is an exact interval union on the edge's parameter line.  Coordinates
    are rescaled to integers up front so the scan runs on machine integers.
    """
    scale = lcm(
        *(v.x.denominator for B in (B1, B2) for v in B.vertices),
        *(v.y.denominator for B in (B1, B2) for v in B.vertices),
    )
    V1 = [(int(v.x * scale), int(v.y * scale)) for v in B1.vertices]
    V2 = [(int(v.x * scale), int(v.y * scale)) for v in B2.vertices]
    H = _int_hull_ring(V1 + V2)
    if len(H) == 1:
        return None

    def gap_point(px: int, py: int, dx: int, dy: int, num: int, span: int) -> Point:
        t = Fraction(num, 2 * span)
        return Point(Fraction(px + t * dx, scale), Fraction(py + t * dy, scale))

    if len(H) == 2:
        (px, py), (qx, qy) = H
        dx, dy = qx - px, qy - py
        span = dx * dx + dy * dy
        intervals = []
        for V in (V1, V2):
            ts = [dx * (x - px) + dy * (y - py) for x, y in V]
            intervals.append((min(ts), max(ts)))
        num = _gap_numerator(intervals, span)
        return None if num is None else gap_point(px, py, dx, dy, num, span)

    m = len(H)
    for i in range(m):
        px, py = H[i]
        qx, qy = H[(i + 1) % m]
        dx, dy = qx - px, qy - py
        nx, ny = dy, -dx
        off = nx * px + ny * py
        span = dx * dx + dy * dy
        intervals = []
        for V in (V1, V2):
            best = max(nx * x + ny * y for x, y in V)
            if best != off:
                continue
            ts = [dx * (x - px) + dy * (y - py) for x, y in V if nx * x + ny * y == best]
            intervals.append((min(ts), max(ts)))
        num = _gap_numerator(intervals, span)
        if num is not None:
            return gap_point(px, py, dx, dy, num, span)
    return None


def is_convex_union(B1: Body, B2: Body) -> bool:
    """True iff B1 ∪ B2 is convex (exact boundary-cover test)."""
    return uncovered_hull_point(B1, B2) is None
