"""Floating-point mode for smooth support functions.

Bodies are trigonometric polynomials h(phi) = a0 + sum a_k cos(k phi) +
b_k sin(k phi), validated by h + h'' > margin on a dense grid, so that the
support calculus (one-sided derivatives, the middle-point curve, the
symmetry criterion p + p'' = 0) has closed forms.  Finite differences serve
only as the independent checking side of each identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class NumericTolerances:
    """All fixed tolerances of the numeric mode in one place."""

    identity: float = 1e-12
    derivative: float = 1e-6
    cover: float = 1e-6
    validity_samples: int = 4096
    symmetry_samples: int = 1024


TOLERANCES = NumericTolerances()


class SmoothBodyError(ValueError):
    """Rejected harmonic coefficients (h + h'' not above the margin)."""

    def __init__(self, phi: float, value: float, margin: float):
        self.phi = phi
        self.value = value
        self.margin = margin
        super().__init__(f"h + h'' = {value:.6g} <= margin {margin:.6g} at phi = {phi:.6g}")


@dataclass(frozen=True)
class SmoothBody:
    """Validated smooth convex body given by harmonic support coefficients."""

    a0: float
    harmonics: tuple[tuple[int, float, float], ...]  # (k, a_k, b_k), k >= 1
    min_curvature: float  # certified grid minimum of h + h''

    def h(self, phi: float) -> float:
        return self.a0 + sum(
            a * math.cos(k * phi) + b * math.sin(k * phi) for k, a, b in self.harmonics
        )

    def h_plus_h2(self, phi: float) -> float:
        return self.a0 + sum(
            (1 - k * k) * (a * math.cos(k * phi) + b * math.sin(k * phi))
            for k, a, b in self.harmonics
        )

    def p(self, phi: float) -> float:
        """Support gap (h(phi) - h(phi + pi)) / 2; only odd harmonics survive."""
        return sum(
            a * math.cos(k * phi) + b * math.sin(k * phi)
            for k, a, b in self.harmonics
            if k % 2 == 1
        )

    def p_prime(self, phi: float) -> float:
        return sum(
            k * (b * math.cos(k * phi) - a * math.sin(k * phi))
            for k, a, b in self.harmonics
            if k % 2 == 1
        )

    def p_plus_p2(self, phi: float) -> float:
        return sum(
            (1 - k * k) * (a * math.cos(k * phi) + b * math.sin(k * phi))
            for k, a, b in self.harmonics
            if k % 2 == 1 and k >= 3
        )

    def boundary_point(self, phi: float) -> tuple[float, float]:
        """Boundary parametrization h*u + h'*u' (valid for strictly convex h)."""
        hv = self.h(phi)
        h1 = sum(
            k * (b * math.cos(k * phi) - a * math.sin(k * phi))
            for k, a, b in self.harmonics
        )
        c, s = math.cos(phi), math.sin(phi)
        return (hv * c - h1 * s, hv * s + h1 * c)

    def rotated(self, theta: float) -> "SmoothBody":
        """The body rotated counterclockwise by theta (revalidated)."""
        coeffs = [(0, self.a0, 0.0)]
        for k, a, b in self.harmonics:
            ck, sk = math.cos(k * theta), math.sin(k * theta)
            coeffs.append((k, a * ck - b * sk, a * sk + b * ck))
        return make_smooth_body(coeffs)


def make_smooth_body(
    coeffs: Iterable[tuple[int, float, float]], margin: float = 0.0
) -> SmoothBody:
    """Validate harmonic coefficients into a SmoothBody.

    ``coeffs`` rows are (k, a_k, b_k); the k = 0 row carries the constant
    term.  Raises SmoothBodyError with the violating angle when h + h''
    fails to stay above ``margin`` on the validation grid.
    """
    a0 = 0.0
    terms: dict[int, tuple[float, float]] = {}
    for k, a, b in coeffs:
        if k < 0:
            raise ValueError(f"negative harmonic order {k}")
        if k == 0:
            a0 += float(a)
            continue
        pa, pb = terms.get(k, (0.0, 0.0))
        terms[k] = (pa + float(a), pb + float(b))
    harmonics = tuple((k, a, b) for k, (a, b) in sorted(terms.items()) if a != 0 or b != 0)
    body = SmoothBody(a0, harmonics, 0.0)
    n = TOLERANCES.validity_samples
    worst_phi, worst = 0.0, math.inf
    for i in range(n):
        phi = 2 * math.pi * i / n
        v = body.h_plus_h2(phi)
        if v < worst:
            worst_phi, worst = phi, v
    if worst <= margin:
        raise SmoothBodyError(worst_phi, worst, margin)
    return SmoothBody(a0, harmonics, worst)


@dataclass(frozen=True)
class ZCurveSample:
    """One sample of the middle-point curve z = p*u + p'*u'."""

    phi: float
    z: tuple[float, float]
    p: float
    p_prime: float


def z_curve(SB: SmoothBody, phi: float) -> ZCurveSample:
    p = SB.p(phi)
    pp = SB.p_prime(phi)
    c, s = math.cos(phi), math.sin(phi)
    return ZCurveSample(phi, (p * c - pp * s, p * s + pp * c), p, pp)


@dataclass(frozen=True)
class FdCheck:
    """Finite-difference residuals against the derivative identity p' = <z, u'>.

    ``right`` and ``left`` are the one-sided difference residuals (O(step));
    ``central`` is the symmetric difference residual (O(step^2)).
    """

    right: float
    left: float
    central: float


def fd_check_lemma4(SB: SmoothBody, phi: float, step: float) -> FdCheck:
    """Check the support-gap derivative identity at phi by finite differences."""
    if not 1e-6 <= step <= 1e-3:
        raise ValueError(f"step {step} outside [1e-6, 1e-3]")
    zs = z_curve(SB, phi)
    c, s = math.cos(phi), math.sin(phi)
    target = zs.z[0] * (-s) + zs.z[1] * c  # <z, u'>
    p0 = SB.p(phi)
    pr = (SB.p(phi + step) - p0) / step
    pl = (p0 - SB.p(phi - step)) / step
    pc = (SB.p(phi + step) - SB.p(phi - step)) / (2 * step)
    return FdCheck(abs(pr - target), abs(pl - target), abs(pc - target))


def symmetry_residual(SB: SmoothBody) -> float:
    """Max of |p + p''| over the sample grid; 0 iff p is a pure first harmonic.

    Vanishes exactly when the body is centrally symmetric up to translation
    (no odd harmonics of order >= 3).
    """
    n = TOLERANCES.symmetry_samples
    return max(abs(SB.p_plus_p2(2 * math.pi * i / n)) for i in range(n))


def _hull_ring(points: Sequence[tuple[float, float]]) -> list[tuple[float, float]]:
    """Monotone-chain hull for float pairs; CCW from the lexicographic minimum."""
    pts = sorted(set(points))
    if len(pts) == 1:
        return pts
    def crossv(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    lower: list[tuple[float, float]] = []
    for p in pts:
        while len(lower) >= 2 and crossv(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and crossv(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    if len(lower) == 2 and len(upper) == 2:
        return [pts[0], pts[-1]]
    return lower[:-1] + upper[:-1]


def a_body_approx(SB: SmoothBody, m: int) -> list[tuple[float, float]]:
    """Hull of the middle-point curve sampled at m angles over [0, pi).

    The curve satisfies z(phi + pi) = z(phi), so a half-turn sweep covers it.
    Returns the hull vertices CCW (one point for a centrally symmetric body).
    """
    if m < 16:
        raise ValueError("need at least 16 samples")
    pts = [z_curve(SB, math.pi * i / m).z for i in range(m)]
    return _hull_ring(pts)
