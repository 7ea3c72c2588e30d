"""Summand extraction for parallel edge pairs.

A parallel edge pair of a polygon yields a 0-symmetric segment summand S
with P = C + S, where C is P with both edges shrunk by the shorter edge
vector.  Iterating until no pair remains (and splitting a degenerate
segment core into its own midpoint and summand) writes any body as
core + sum of 0-symmetric segments with a pair-free core.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geom import (
    Body,
    Direction,
    GeometryError,
    Point,
    hull,
    midpoint,
    minkowski_sum,
    support,
)
from .middle import has_parallel_edges, parallel_edge_directions


@dataclass(frozen=True)
class TraceStep:
    """One extraction: a 0-symmetric summand [-c, c] with c = (length/2) * direction."""

    direction: Direction  # primitive integer vector, angle in [0, pi)
    length: Fraction  # extracted edge length as a multiple of the direction


@dataclass(frozen=True)
class Decomposition:
    core: Body
    summands: tuple[Body, ...]
    trace: tuple[TraceStep, ...]


def _edge_coefficient(v: Point, d: Direction) -> Fraction:
    """Coefficient t with v = t * d for a vector v parallel to d."""
    return v.x / d.dx if d.dx != 0 else v.y / d.dy


def _zero_symmetric_segment(c: Point) -> Body:
    return Body.segment(-c, c)


def extract_parallel_summand(
    P: Body, *, reverse_order: bool = False
) -> Optional[tuple[Body, Body]]:
    """Extract one parallel-pair summand: (S, C) with P = C + S, or None.

    Pairs are processed in canonical edge-direction order (smallest first;
    ``reverse_order`` flips the choice for order-independence checks).  S is
    the shorter edge recentered to 0-symmetric form; equal-length pairs
    extract the full common length and the pair annihilates.
    """
    if P.kind != "polygon":
        raise GeometryError("extract_parallel_summand requires a polygon")
    dirs = parallel_edge_directions(P)
    if not dirs:
        return None
    d = dirs[-1] if reverse_order else dirs[0]
    ring = P.vertices
    n = len(ring)
    i = j = -1
    ci = cj = Fraction(0)
    for k in range(n):
        w = ring[(k + 1) % n] - ring[k]
        if w.cross(d.as_point()) != 0:
            continue
        t = _edge_coefficient(w, d)
        if t > 0:
            i, ci = k, t
        else:
            j, cj = k, -t
    assert i >= 0 and j >= 0
    m = min(ci, cj)
    c = (m / 2) * d.as_point()
    S = _zero_symmetric_segment(c)
    shifted = []
    k = (i + 1) % n
    while True:  # vertices from the end of edge i through the start of edge j
        shifted.append(ring[k] - c)
        if k == j:
            break
        k = (k + 1) % n
    k = (j + 1) % n
    while True:  # remaining vertices, on the other side of the extracted strip
        shifted.append(ring[k] + c)
        if k == i:
            break
        k = (k + 1) % n
    C = hull(shifted)
    if minkowski_sum(C, S) != P:
        raise GeometryError("summand extraction failed the Minkowski roundtrip")
    for nrm in P.edge_normals():
        if support(C, nrm) != support(P, nrm) - support(S, nrm):
            raise GeometryError("summand extraction failed support subtraction")
    return S, C


def decompose(B: Body, *, reverse_order: bool = False) -> Decomposition:
    """Write B = core + sum of 0-symmetric segment summands.

    The core has no parallel edge pair or has dimension < 2; a segment core
    is itself split into its midpoint and one summand.  Summands extracted in
    the same direction are merged.
    """
    body = B
    steps: list[TraceStep] = []
    budget = len(B.vertices) + 1
    while body.kind == "polygon":
        nxt = extract_parallel_summand(body, reverse_order=reverse_order)
        if nxt is None:
            break
        S, body = nxt
        p, q = S.vertices
        d = Direction((q - p).x, (q - p).y).axis_rep()
        steps.append(TraceStep(d, abs(_edge_coefficient(q - p, d))))
        budget -= 1
        assert budget > 0, "extraction did not terminate within the edge count"
    if body.kind == "segment":
        p, q = body.vertices
        d = Direction((q - p).x, (q - p).y).axis_rep()
        steps.append(TraceStep(d, abs(_edge_coefficient(q - p, d))))
        body = Body.point(midpoint(p, q))
    merged: dict[tuple[int, int], Fraction] = {}
    order: list[Direction] = []
    for st in steps:
        key = st.direction.canonical_tuple
        if key not in merged:
            merged[key] = Fraction(0)
            order.append(st.direction)
        merged[key] += st.length
    summands = tuple(
        _zero_symmetric_segment((merged[d.canonical_tuple] / 2) * d.as_point())
        for d in order
    )
    trace = tuple(TraceStep(d, merged[d.canonical_tuple]) for d in order)
    return Decomposition(body, summands, trace)


def verify_decomposition(B: Body, D: Decomposition) -> bool:
    """Re-check the decomposition: exact recomposition, pair-free core, 0-symmetry."""
    total = D.core
    for S in D.summands:
        if S.kind != "segment":
            return False
        p, q = S.vertices
        if p + q != Point(0, 0):
            return False
        total = minkowski_sum(total, S)
    if total != B:
        return False
    if D.core.kind == "polygon" and has_parallel_edges(D.core) is not None:
        return False
    return True
