"""Acceptance gate: every criterion at its stated scale and tolerance.

Each test prints one PASS/FAIL line (capture is suspended for the line, so
the report shows up in a plain ``pytest -v`` run).  Corpora are seeded and
sized exactly as required; tolerances are pinned here, not computed.
"""

import contextlib
import json
import math
import random
import sys
import time
from pathlib import Path

import pytest

from midset import (
    Body,
    Point,
    a_body,
    affine_dim,
    exposed_points,
    is_centrally_symmetric,
    symmetry_residual,
    theorem_points,
)
from midset.bodyio import dumps_body
from midset.campaigns import (
    run_decompose_roundtrip,
    run_lemma2_agreement,
    run_lemma6,
    run_symmetric_pipeline,
)
from midset.cli import _certificates_obj
from midset.convexity import exposing_frame, middle_intercept_profile
from midset.generate import random_no_parallel_polygon, random_smooth_body
from midset.smooth import fd_check_lemma4, make_smooth_body

SEED = 74025
GOLDEN = Path(__file__).parent / "golden"

_CAPTURE_MANAGER = None


@pytest.fixture(autouse=True)
def _grab_capture_manager(request):
    global _CAPTURE_MANAGER
    _CAPTURE_MANAGER = request.config.pluginmanager.getplugin("capturemanager")


def report(num: int, name: str, ok: bool, detail: str = "") -> None:
    verdict = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    line = f"ACCEPTANCE {num} {name}: {verdict}{suffix}\n"
    suspend = (
        _CAPTURE_MANAGER.global_and_fixture_disabled()
        if _CAPTURE_MANAGER is not None
        else contextlib.nullcontext()
    )
    with suspend:
        sys.stdout.write(line)
        sys.stdout.flush()
    assert ok, f"criterion {num} {name} failed: {detail}"


def test_c1_lemma6_exposed_points_are_convexity_points():
    start = time.perf_counter()
    res = run_lemma6(500, SEED)
    elapsed = time.perf_counter() - start
    report(
        1,
        "lemma6 suite (500 no-parallel polygons)",
        res.failed == 0,
        f"{res.passed}/{res.count} in {elapsed:.1f}s, target <120s" + "".join(res.failures[:2]),
    )


def test_c2_theorem_three_affinely_independent_points():
    rng = random.Random(SEED)
    failures = []
    for i in range(500):
        P = random_no_parallel_polygon(rng, rng.randint(3, 40))
        assert not is_centrally_symmetric(P).symmetric  # parallel-edge argument
        certs = theorem_points(P)
        pts = [c.point for c in certs]
        if len(certs) < 3 or affine_dim(pts) != 2:
            failures.append(i)
    report(
        2,
        "theorem suite (>=3 certificates, dim 2)",
        not failures,
        f"500 bodies, failures: {failures[:4]}",
    )


def test_c3_lemma2_agreement_on_grids():
    start = time.perf_counter()
    res = run_lemma2_agreement(100, SEED)
    elapsed = time.perf_counter() - start
    ok = res.failed == 0 and elapsed < 180
    report(
        3,
        "lemma2 agreement (100 polygons x 21x21 grid)",
        ok,
        f"{res.passed}/{res.count} in {elapsed:.1f}s (<180s)",
    )


def test_c4_lemma3_roundtrip_and_transfer():
    res = run_decompose_roundtrip(200, SEED)
    report(
        4,
        "lemma3 roundtrip + transfer (200 built sums)",
        res.failed == 0,
        f"{res.passed}/{res.count}" + "".join(res.failures[:2]),
    )


def test_c5_symmetric_pipeline():
    res = run_symmetric_pipeline(100, SEED)
    report(
        5,
        "symmetric pipeline (100 centrally symmetric bodies)",
        res.failed == 0,
        f"{res.passed}/{res.count}" + "".join(res.failures[:2]),
    )


def test_c6_lemma4_derivative_identity():
    rng = random.Random(SEED)
    worst = 0.0
    ok = True
    for _ in range(20):
        SB = random_smooth_body(rng)
        for _ in range(1000):
            phi = rng.uniform(0, 2 * math.pi)
            r = fd_check_lemma4(SB, phi, 1e-4).central
            worst = max(worst, r)
            if r >= 1e-6:
                ok = False
    mono_ok = True
    for _ in range(50):
        SB = random_smooth_body(rng)
        phi = rng.uniform(0, 2 * math.pi)
        seq = [fd_check_lemma4(SB, phi, s) for s in (1e-3, 1e-4, 1e-5)]
        for prev, nxt in zip(seq, seq[1:]):
            # shrink each decade, 10% slack, noise floor below 1e-9
            if nxt.central > max(1.1 * prev.central, 1e-9):
                mono_ok = False
            if nxt.right > max(1.1 * prev.right, 1e-9):
                mono_ok = False
    report(
        6,
        "lemma4 numerics (20 bodies x 1000 angles, step 1e-4)",
        ok and mono_ok,
        f"worst residual {worst:.2e} < 1e-6, monotone {mono_ok}",
    )


def test_c7_lemma5_symmetry_residual():
    rng = random.Random(SEED)
    symmetric_ok = True
    for _ in range(10):
        coeffs = [(0, 2.0, 0.0), (1, rng.uniform(-1, 1), rng.uniform(-1, 1))]
        for k in (2, 4, 6):
            coeffs.append((k, rng.uniform(-0.02, 0.02), rng.uniform(-0.02, 0.02)))
        if symmetry_residual(make_smooth_body(coeffs)) > 1e-12:
            symmetric_ok = False
    asymmetric_ok = True
    worst_low = math.inf
    for k in (3, 5, 7):
        for c in (0.05, 0.08, 0.1):
            # the constant term must dominate (k^2 - 1) * c for a valid body
            body = make_smooth_body([(0, 8.0, 0.0), (1, 0.3, -0.2), (2, 0.02, 0.0), (k, c, 0.0)])
            r = symmetry_residual(body)
            worst_low = min(worst_low, r)
            if r < 0.1:
                asymmetric_ok = False
    report(
        7,
        "lemma5 numerics (symmetry residual thresholds)",
        symmetric_ok and asymmetric_ok,
        f"symmetric bodies exact 0, smallest asymmetric residual {worst_low:.3f} >= 0.1",
    )


def test_c8_lemma6_intercept_profiles():
    rng = random.Random(SEED)
    checked = 0
    ok = True
    for _ in range(50):
        P = random_no_parallel_polygon(rng, rng.randint(3, 15), box=100)
        A = a_body(P)
        for z in exposed_points(A):
            origin, e1, e2 = exposing_frame(P, z)
            for v in A.vertices:  # strict exact frame inequality
                if v != z and e2.dot(v - z) <= 0:
                    ok = False
            prof = middle_intercept_profile(P, z, 999)
            if prof.monotone_violations != 0:
                ok = False
            checked += 1
    report(
        8,
        "lemma6 profiles (50 polygons, exact frames, 0 violations)",
        ok,
        f"{checked} exposed points checked at tolerance 1e-9",
    )


def test_c9_known_value_regressions():
    t0 = Body.polygon([Point(0, 0), Point(4, 0), Point(0, 4)])
    square = Body.polygon([Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)])

    A = a_body(t0)
    assert set(A.vertices) == {Point(2, 0), Point(0, 2), Point(2, 2)}
    a_bytes = dumps_body(A)

    t0_doc = json.dumps(_certificates_obj(theorem_points(t0))) + "\n"
    assert {tuple(c["z"]) for c in json.loads(t0_doc)["certificates"]} == {
        (2, 0), (0, 2), (2, 2)
    }

    square_doc = json.dumps(_certificates_obj(theorem_points(square))) + "\n"
    assert json.loads(square_doc)["certificates"][0]["z"] == ["1/2", "1/2"]

    golden_pairs = [
        ("t0_a_body.json", a_bytes),
        ("t0_points.json", t0_doc),
        ("square_points.json", square_doc),
    ]
    mismatches = [
        name for name, text in golden_pairs
        if (GOLDEN / name).read_text() != text
    ]
    report(
        9,
        "known-value golden regressions",
        not mismatches,
        "byte-identical" if not mismatches else f"mismatch: {mismatches}",
    )
