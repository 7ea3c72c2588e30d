"""Seeded property campaigns over generated corpora.

Each suite replays one lemma- or pipeline-level property over ``count``
seeded inputs and reports per-input failures; the CLI campaign command and
the acceptance tests both run through these functions.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .convexity import (
    is_convexity_point_char,
    is_convexity_point_direct,
    middle_intercept_profile,
    theorem_points,
)
from .decompose import decompose, verify_decomposition
from .generate import (
    GENERATOR_ID,
    candidate_grid,
    random_no_parallel_polygon,
    random_polygon,
    random_smooth_body,
    random_symmetric_polygon,
    with_summands,
)
from .geom import affine_dim
from .middle import a_body, exposed_points, is_centrally_symmetric
from .smooth import fd_check_lemma4

SUITES = (
    "lemma6",
    "theorem",
    "lemma2-agreement",
    "decompose-roundtrip",
    "lemma4",
    "profile",
)


@dataclass
class SuiteResult:
    suite: str
    count: int
    seed: int
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    generator: str = GENERATOR_ID

    def record(self, ok: bool, detail: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(detail)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def run_lemma6(count: int, seed: int) -> SuiteResult:
    """Every exposed point of the midpoint body passes the direct test."""
    res = SuiteResult("lemma6", count, seed)
    rng = random.Random(seed)
    for i in range(count):
        P = random_no_parallel_polygon(rng, rng.randint(3, 40))
        bad = [
            z for z in exposed_points(a_body(P)) if not is_convexity_point_direct(P, z)
        ]
        res.record(not bad, f"input {i}: exposed points {bad} failed direct test")
    return res


def run_theorem(count: int, seed: int) -> SuiteResult:
    """theorem_points yields >= 3 affinely independent verified certificates."""
    res = SuiteResult("theorem", count, seed)
    rng = random.Random(seed)
    for i in range(count):
        P = random_no_parallel_polygon(rng, rng.randint(3, 40))
        certs = theorem_points(P)
        pts = [c.point for c in certs]
        ok = len(certs) >= 3 and affine_dim(pts) == 2
        res.record(ok, f"input {i}: {len(certs)} certificates, dim {affine_dim(pts)}")
    return res


def run_lemma2_agreement(count: int, seed: int) -> SuiteResult:
    """Characterization equals the direct test on a 21x21 bounding-box grid."""
    res = SuiteResult("lemma2-agreement", count, seed)
    rng = random.Random(seed)
    for i in range(count):
        P = random_no_parallel_polygon(rng, rng.randint(3, 12))
        mismatch = None
        for z in candidate_grid(P, 20):
            char_ok, _ = is_convexity_point_char(P, z)
            if char_ok != is_convexity_point_direct(P, z):
                mismatch = z
                break
        res.record(mismatch is None, f"input {i}: disagreement at {mismatch}")
    return res


def run_decompose_roundtrip(count: int, seed: int) -> SuiteResult:
    """Roundtrip, pair-free core, and certificate transfer for built sums."""
    res = SuiteResult("decompose-roundtrip", count, seed)
    rng = random.Random(seed)
    for i in range(count):
        K = with_summands(rng, random_polygon(rng, rng.randint(3, 10)), rng.randint(0, 3))
        D = decompose(K)
        if not verify_decomposition(K, D):
            res.record(False, f"input {i}: roundtrip failed")
            continue
        transfer_bad = [
            c.point for c in theorem_points(D.core)
            if not is_convexity_point_direct(K, c.point)
        ]
        res.record(not transfer_bad, f"input {i}: core points {transfer_bad} did not transfer")
    return res


def run_symmetric_pipeline(count: int, seed: int) -> SuiteResult:
    """Symmetric bodies yield exactly the construction center, direct-verified."""
    res = SuiteResult("symmetric", count, seed)
    rng = random.Random(seed)
    for i in range(count):
        B, center = random_symmetric_polygon(rng, rng.randint(3, 12))
        certs = theorem_points(B)
        sym = is_centrally_symmetric(B)
        ok = (
            len(certs) == 1
            and certs[0].method == "symmetric-center"
            and certs[0].point == center
            and sym.symmetric
            and sym.center == center
            and is_convexity_point_direct(B, center)
        )
        res.record(ok, f"input {i}: center mismatch ({certs[0].point} vs {center})")
    return res


def run_lemma4(count: int, seed: int, angles: int = 1000) -> SuiteResult:
    """Central-difference residuals of the derivative identity stay below 1e-6."""
    res = SuiteResult("lemma4", count, seed)
    rng = random.Random(seed)
    for i in range(count):
        SB = random_smooth_body(rng)
        worst = 0.0
        for _ in range(angles):
            phi = rng.uniform(0.0, 2 * 3.141592653589793)
            worst = max(worst, fd_check_lemma4(SB, phi, 1e-4).central)
        res.record(worst < 1e-6, f"input {i}: worst residual {worst:.3g}")
    return res


def run_profile(count: int, seed: int, samples: int = 999) -> SuiteResult:
    """Exact exposing frames and monotone intercept profiles at every vertex."""
    res = SuiteResult("profile", count, seed)
    rng = random.Random(seed)
    for i in range(count):
        P = random_no_parallel_polygon(rng, rng.randint(3, 15), box=100)
        bad = None
        for z in exposed_points(a_body(P)):
            prof = middle_intercept_profile(P, z, samples)
            if prof.monotone_violations != 0:
                bad = (z, prof.monotone_violations)
                break
        res.record(bad is None, f"input {i}: violations at {bad}")
    return res


_RUNNERS = {
    "lemma6": run_lemma6,
    "theorem": run_theorem,
    "lemma2-agreement": run_lemma2_agreement,
    "decompose-roundtrip": run_decompose_roundtrip,
    "lemma4": run_lemma4,
    "profile": run_profile,
}


def run_suite(suite: str, count: int, seed: int) -> SuiteResult:
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    res = _RUNNERS[suite](count, seed)
    res.elapsed = time.perf_counter() - start
    return res
