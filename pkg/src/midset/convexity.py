"""Convexity-point tests and the three-point certificate pipeline.

A point z is a convexity point of K when K united with its point reflection
in z is convex.  The direct test applies that definition through the exact
boundary-cover check; for polygons without parallel edges an equivalent
characterization enumerates, per antipodal event, the directions whose
middle line passes through z and demands that the middle set contain z.
Certificates produced by any route are re-verified with the direct test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .decompose import decompose
from .geom import (
    Body,
    Direction,
    GeometryError,
    Point,
    is_convex_union,
    midpoint,
    reflect,
    uncovered_hull_point,
)
from .middle import (
    a_body,
    antipodal_events,
    exposed_points,
    has_parallel_edges,
    is_centrally_symmetric,
)

PROFILE_TOLERANCE = 1e-9
PROFILE_POLE_CLAMP = 1e-3


def is_convexity_point_direct(B: Body, z: Point) -> bool:
    """Definition-level test: is B ∪ (2z - B) convex?"""
    return is_convex_union(B, reflect(B, z))


def witness_nonconvexity(B1: Body, B2: Body) -> Optional[Point]:
    """A hull-boundary point outside both bodies, or None when the union is convex."""
    return uncovered_hull_point(B1, B2)


def is_convexity_point_char(P: Body, z: Point) -> tuple[bool, list[Direction]]:
    """Middle-line characterization of convexity points (no parallel edges).

    Enumerates every direction n with z on the middle line M(n) and checks
    z in the middle set Z(n).  Inside an antipodal arc with vertex-pair
    midpoint m, the only candidate is the ray perpendicular to z - m (the
    whole arc when z == m); arc boundary rays are handled by their own
    boundary events, where Z is a full middle segment.

    Returns (True, witnesses) with all passing directions, or
    (False, failures) with the directions where z lies on M but not in Z.
    """
    if P.kind != "polygon":
        raise GeometryError("characterization requires a polygon")
    if has_parallel_edges(P) is not None:
        raise GeometryError("characterization requires a pair-free polygon; decompose first")
    witnesses: list[Direction] = []
    failures: list[Direction] = []
    seen: set[tuple[int, int]] = set()

    def record(bucket: list[Direction], n: Direction) -> None:
        c = n.canonical()
        if c.canonical_tuple not in seen:
            seen.add(c.canonical_tuple)
            bucket.append(c)

    for ev in antipodal_events(P):
        if ev.is_boundary:
            # the event faces carry the support data: h(r) = <r, face point>
            r = ev.lo
            zm = midpoint(ev.face_pos.a, ev.face_neg.a)
            if r.dot(z) == r.dot(zm):  # z on the middle line at r
                ends = [
                    midpoint(x, y)
                    for x in ev.face_pos.points()
                    for y in ev.face_neg.points()
                ]
                if len(ends) == 1:
                    on_z = z == ends[0]
                else:
                    d = ends[1] - ends[0]
                    w = z - ends[0]
                    on_z = d.cross(w) == 0 and 0 <= d.dot(w) <= d.dot(d)
                record(witnesses if on_z else failures, r)
        else:
            m = midpoint(ev.face_pos.a, ev.face_neg.a)
            if z == m:
                record(witnesses, ev.representative())
                continue
            w = z - m
            n0 = Direction(-w.y, w.x)
            for n in (n0, -n0):
                if ev.strictly_contains(n):
                    record(failures, n)  # z on M(n), but Z(n) = {m} != {z}
    ok = not failures
    return ok, (witnesses if ok else failures)


@dataclass(frozen=True)
class ConvexityCertificate:
    """A verified convexity point with the route that produced it.

    ``witnesses`` are directions whose middle line passes through the point
    with the middle set containing it; ``degenerate`` marks the segment and
    point input policy extension (midpoint / identity).
    """

    point: Point
    method: str  # "characterization" | "symmetric-center"
    witnesses: tuple[Direction, ...] = ()
    degenerate: bool = False


def theorem_points(B: Body) -> list[ConvexityCertificate]:
    """Certified convexity points of a body.

    Pipeline: decompose B into a pair-free core plus 0-symmetric segments;
    a degenerate core means B is centrally symmetric and its center is the
    certificate; otherwise every exposed point of the core's midpoint body
    is certified (middle-set machinery) and re-verified by the direct test
    against B itself.  A non-centrally-symmetric polygon always yields at
    least three affinely independent certificates.
    """
    if B.kind == "point":
        return [ConvexityCertificate(B.vertices[0], "symmetric-center", (), True)]
    if B.kind == "segment":
        return [ConvexityCertificate(midpoint(*B.vertices), "symmetric-center", (), True)]
    D = decompose(B)
    if D.core.dim < 2:
        sym = is_centrally_symmetric(B)
        assert sym.symmetric and sym.center is not None
        if not is_convexity_point_direct(B, sym.center):
            raise GeometryError("symmetry center failed the direct test")
        return [ConvexityCertificate(sym.center, "symmetric-center")]
    core = D.core
    certs: list[ConvexityCertificate] = []
    for z in exposed_points(a_body(core)):
        ok, wits = is_convexity_point_char(core, z)
        if not ok or not is_convexity_point_direct(B, z):
            raise GeometryError(f"exposed point {z} failed certificate verification")
        certs.append(ConvexityCertificate(z, "characterization", tuple(wits)))
    return certs


@dataclass(frozen=True)
class InterceptProfile:
    """Sampled middle-line intercept function around an exposed point.

    The frame places the exposed point at the origin with e2 the inward
    normal of a line exposing it, so every other vertex of the midpoint body
    has positive e2-coordinate (checked exactly).  f(phi) is the e1-intercept
    of the middle line with normal at angle phi from e1; it vanishes on a
    single closed interval and increases outside it.
    """

    origin: Point
    e1: Direction
    e2: Direction
    samples: tuple[tuple[float, float], ...]
    zero_component: Optional[tuple[float, float]]
    monotone_violations: int


def exposing_frame(P: Body, exposed: Point) -> tuple[Point, Direction, Direction]:
    """Exact frame (origin, e1, e2) for an exposed point of the midpoint body."""
    A = a_body(P)
    if exposed not in A.vertices:
        raise GeometryError(f"{exposed} is not an exposed point of the midpoint body")
    vs = A.vertices
    i = vs.index(exposed)
    n = len(vs)
    prev_edge = vs[i] - vs[i - 1]
    next_edge = vs[(i + 1) % n] - vs[i]
    n_prev = Direction(prev_edge.y, -prev_edge.x).canonical()
    n_next = Direction(next_edge.y, -next_edge.x).canonical()
    e2 = Direction(-(n_prev.dx + n_next.dx), -(n_prev.dy + n_next.dy)).canonical()
    e1 = Direction(e2.dy, -e2.dx)  # (e1, e2) positively oriented, e1' = e2
    for v in vs:
        if v != exposed and e2.dot(v - exposed) <= 0:
            raise GeometryError("frame does not strictly expose the point")
    return exposed, e1, e2


def middle_intercept_profile(P: Body, exposed: Point, n_samples: int) -> InterceptProfile:
    """Sample f(phi) = p(phi) / cos(phi) in the exposing frame of an exposed point.

    Floating point; the sampled range clamps to |phi| <= pi/2 - 1e-3 to stay
    off the poles.  Monotone violations count consecutive decreases beyond
    tolerance outside the zero set.
    """
    if n_samples < 2:
        raise GeometryError("n_samples must be at least 2")
    origin, e1, e2 = exposing_frame(P, exposed)
    scale1 = math.hypot(float(e1.dx), float(e1.dy))
    scale2 = math.hypot(float(e2.dx), float(e2.dy))
    ux1, uy1 = float(e1.dx) / scale1, float(e1.dy) / scale1
    ux2, uy2 = float(e2.dx) / scale2, float(e2.dy) / scale2
    verts = [(float(v.x - origin.x), float(v.y - origin.y)) for v in P.vertices]

    def f_at(phi: float) -> float:
        c, s = math.cos(phi), math.sin(phi)
        ux, uy = c * ux1 + s * ux2, c * uy1 + s * uy2
        h_pos = max(ux * vx + uy * vy for vx, vy in verts)
        h_neg = max(-ux * vx - uy * vy for vx, vy in verts)
        return (h_pos - h_neg) / (2 * c)

    lo = -math.pi / 2 + PROFILE_POLE_CLAMP
    hi = math.pi / 2 - PROFILE_POLE_CLAMP
    step = (hi - lo) / (n_samples - 1)
    samples = tuple((lo + k * step, f_at(lo + k * step)) for k in range(n_samples))
    zero_phis = [phi for phi, fv in samples if abs(fv) <= PROFILE_TOLERANCE]
    zero_component = (zero_phis[0], zero_phis[-1]) if zero_phis else None
    violations = 0
    for (_, f0), (_, f1) in zip(samples, samples[1:]):
        if f1 < f0 - PROFILE_TOLERANCE:
            if abs(f0) <= PROFILE_TOLERANCE and abs(f1) <= PROFILE_TOLERANCE:
                continue
            violations += 1
    return InterceptProfile(origin, e1, e2, samples, zero_component, violations)
