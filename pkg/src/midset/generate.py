"""Seeded random corpora for the property campaigns.

All generators draw from ``random.Random`` (MT19937), so one (seed, shape)
pair reproduces one corpus byte for byte; reports carry GENERATOR_ID so
corpora can be regenerated elsewhere.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .geom import Body, GeometryError, Point, hull, minkowski_sum
from .middle import parallel_edge_directions
from .smooth import SmoothBody, make_smooth_body

GENERATOR_ID = "python-random-mt19937"

DEFAULT_BOX = 1000
MAX_ATTEMPTS = 1000


def lattice_point(rng: random.Random, box: int) -> Point:
    return Point(rng.randint(-box, box), rng.randint(-box, box))


def random_polygon(rng: random.Random, n: int, box: int = DEFAULT_BOX) -> Body:
    """Hull of n random lattice points, retried until it is 2-dimensional."""
    if n < 3:
        raise GeometryError("need at least 3 sample points")
    for _ in range(MAX_ATTEMPTS):
        B = hull([lattice_point(rng, box) for _ in range(n)])
        if B.kind == "polygon":
            return B
    raise GeometryError("failed to generate a polygon")


def random_no_parallel_polygon(rng: random.Random, n: int, box: int = DEFAULT_BOX) -> Body:
    """Random polygon rejected until it has no parallel edge pair."""
    for _ in range(MAX_ATTEMPTS):
        B = random_polygon(rng, n, box)
        if not parallel_edge_directions(B):
            return B
    raise GeometryError("failed to generate a pair-free polygon")


def random_symmetric_polygon(
    rng: random.Random, n: int, box: int = DEFAULT_BOX
) -> tuple[Body, Point]:
    """Centrally symmetric polygon hull(V ∪ -V) + t; returns (body, center t)."""
    for _ in range(MAX_ATTEMPTS):
        pts = [lattice_point(rng, box) for _ in range(max(n, 2))]
        B = hull(pts + [-p for p in pts])
        if B.kind == "polygon":
            t = lattice_point(rng, box)
            return B.translate(t), t
    raise GeometryError("failed to generate a symmetric polygon")


def random_zero_symmetric_segment(rng: random.Random, box: int = 50) -> Body:
    while True:
        v = lattice_point(rng, box)
        if not v.is_zero():
            return Body.segment(-v, v)


def with_summands(rng: random.Random, B: Body, k: int, box: int = 50) -> Body:
    """Minkowski-add k random 0-symmetric segments."""
    for _ in range(k):
        B = minkowski_sum(B, random_zero_symmetric_segment(rng, box))
    return B


def candidate_grid(B: Body, steps: int = 20) -> list[Point]:
    """(steps+1) x (steps+1) rational grid over the bounding box of B."""
    lo, hi = B.bounding_box()
    w, h = hi.x - lo.x, hi.y - lo.y
    return [
        Point(lo.x + Fraction(i, steps) * w, lo.y + Fraction(j, steps) * h)
        for i in range(steps + 1)
        for j in range(steps + 1)
    ]


def random_smooth_body(
    rng: random.Random, k_max: int = 7, min_curvature: float = 0.1
) -> SmoothBody:
    """Random valid harmonic body with curvature margin above min_curvature.

    Coefficients are scaled down until h + h'' clears the margin; the sum of
    (k^2 - 1)|c_k| starts below 0.9 so a couple of halvings always suffice.
    """
    while True:
        coeffs = [(0, 1.0, 0.0)]
        budget = 0.9
        for k in range(1, k_max + 1):
            weight = max(k * k - 1, 1)
            cap = budget / (weight * k_max)
            a = rng.uniform(-cap, cap)
            b = rng.uniform(-cap, cap)
            coeffs.append((k, a, b))
        for _ in range(8):
            try:
                return make_smooth_body(coeffs, margin=min_curvature)
            except ValueError:
                coeffs = [(k, a / 2 if k else a, b / 2 if k else b) for k, a, b in coeffs]
