"""Acceptance criteria, one pass/fail line each in the terminal summary.

Tolerances are pinned here and not shared with the library defaults.
"""

import math
import time

import numpy as np
import pytest

from anglespec import Geodesic, Moebius, angle_cos2, axis, crosses, fixed_points, oriented_angle
from anglespec.arithmetic import admissible_q, detect_rational_pi, euler_phi
from anglespec.group import conjugate_generators, preset
from anglespec.report import report_json
from anglespec.spectrum import build_spectrum

from conftest import ACCEPTANCE_LINES, SQRT2, SQRT5, random_geodesic

pytestmark = pytest.mark.acceptance

MODULAR_RUN = dict(max_word_len=6, max_trace=12, conj_len=6, qmax=50, eps_rat=1e-6)
TOL_MODULAR = 1e-6
TOL_CLOSED_FORM = 1e-9
TOL_ORIENTATION = 1e-12
TOL_CONJUGATION = 1e-6
TOL_GOLDEN = 1e-12
N_PAIRS = 10 ** 4
CONJUGATOR_SEED = 20261019


def verdict(name, ok, detail):
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def modular_run():
    t0 = time.perf_counter()
    report = build_spectrum(preset("modular"), workers=1, **MODULAR_RUN)
    return report, time.perf_counter() - t0


@pytest.fixture(scope="module")
def crossing_pairs():
    rng = np.random.default_rng(CONJUGATOR_SEED)
    pairs = []
    while len(pairs) < N_PAIRS:
        g1, g2 = random_geodesic(rng), random_geodesic(rng)
        if crosses(g1, g2):
            pairs.append((g1, g2))
    return pairs


def test_c1_modular_totient_bound(modular_run):
    report, seconds = modular_run
    bad = [h for h in report.rational_hits if euler_phi(h.q) > 2 or h.q not in (1, 2, 3, 4, 6)]
    verdict("C1a modular hits satisfy phi(q) <= 2",
            not bad and seconds < 60,
            f"{len(report.rational_hits)} hits, q = {[h.q for h in report.rational_hits]}, "
            f"{seconds:.2f} s")


def test_c1_modular_angles_in_admissible_set(modular_run):
    report, _ = modular_run
    allowed = (math.pi / 6, math.pi / 4, math.pi / 3)
    outside = [h.label() for h in report.rational_hits
               if min(abs(h.theta - a) for a in allowed) > TOL_MODULAR]
    verdict("C1b modular hits within {pi/6, pi/4, pi/3}",
            not outside,
            f"hits {[h.label() for h in report.rational_hits]}, outside: {outside}")


def test_c2_closed_form_vs_tangents(crossing_pairs):
    t0 = time.perf_counter()
    worst = max(abs(math.cos(oriented_angle(g1, g2)) ** 2 - angle_cos2(g1, g2))
                for g1, g2 in crossing_pairs)
    seconds = time.perf_counter() - t0
    verdict("C2 closed-form cos^2 vs tangent angle",
            worst <= TOL_CLOSED_FORM and seconds < 5,
            f"max error {worst:.3e} over {len(crossing_pairs)} pairs, {seconds:.2f} s")


def test_c3_orientation_identity(crossing_pairs):
    worst = max(abs(oriented_angle(g1, g2) + oriented_angle(g2, g1) - math.pi)
                for g1, g2 in crossing_pairs)
    verdict("C3 theta + theta' = pi", worst <= TOL_ORIENTATION,
            f"max error {worst:.3e} over {len(crossing_pairs)} pairs")


def test_c4_conjugation_invariance(modular_run):
    report, _ = modular_run
    rng = np.random.default_rng(CONJUGATOR_SEED)
    a, b, c = rng.uniform(-1, 1, 3)
    a += math.copysign(0.5, a)
    g = Moebius(a, b, c, (1 + b * c) / a)
    moved = build_spectrum(conjugate_generators(preset("modular"), g), workers=1, **MODULAR_RUN)
    x = sorted(r.cos2 for r in report.records)
    y = sorted(r.cos2 for r in moved.records)
    worst = max((abs(p - q) for p, q in zip(x, y)), default=0.0)
    verdict("C4 cos^2 multiset invariant under conjugation",
            len(x) == len(y) and worst <= TOL_CONJUGATION,
            f"{len(x)} vs {len(y)} records, max difference {worst:.3e}")


def test_c5_schottky_right_angles():
    report = build_spectrum(preset("symmetric-schottky"), 4, 50, 4, workers=1)
    right = [r for r in report.records if r.theta == math.pi / 2 and r.cos2 == 0.0]
    pairs = sorted({(r.class_i, r.class_j) for r in right})
    unit = angle_cos2(axis(Moebius(3, 4, 2, 3)), Geodesic.vertical(0))
    verdict("C5 symmetric-schottky right angles",
            len(pairs) >= 3 and unit == 0.0,
            f"theta = pi/2 exactly from class pairs {pairs}; unit cos^2 = {unit!r}")


def test_c6_totient_machinery():
    t0 = time.perf_counter()
    n = 10 ** 4
    sieve = np.arange(n + 1)
    for p in range(2, n + 1):
        if sieve[p] == p:
            sieve[p::p] -= sieve[p::p] // p
    phi_ok = all(euler_phi(q) == sieve[q] for q in range(1, n + 1))
    adm = admissible_q(1)
    misses = []
    for q in range(2, 101):
        for p in range(1, q):
            if math.gcd(p, q) == 1:
                r = detect_rational_pi(p * math.pi / q, 200, 1e-9)
                if r is None or (r.p, r.q) != (p, q):
                    misses.append((p, q))
    seconds = time.perf_counter() - t0
    verdict("C6 totient, admissible q, rational detection",
            phi_ok and adm == [1, 2, 3, 4, 6] and not misses and seconds < 5,
            f"phi sieve match {phi_ok}, admissible_q(1) = {adm}, "
            f"{len(misses)} round-trip misses, {seconds:.2f} s")


def test_c7_golden_values():
    checks = []
    alpha, beta = fixed_points(Moebius(2, 1, 1, 1))
    checks += [abs(alpha - (1 - SQRT5) / 2), abs(beta - (1 + SQRT5) / 2)]
    g = axis(Moebius(2, 1, 1, 1))
    checks += [abs(g.center - 0.5), abs(g.radius - SQRT5 / 2)]
    start, end = g.endpoints
    checks.append(0.0 if start < end else 1.0)
    h = axis(Moebius(3, 4, 2, 3))
    checks += [abs(h.center), abs(h.radius - SQRT2)]
    a2, b2 = fixed_points(Moebius(3, 4, 2, 3))
    checks += [abs(a2 + SQRT2), abs(b2 - SQRT2)]
    v = axis(Moebius(4, 0, 0, 0.25))
    checks.append(0.0 if v.is_vertical and v.center == 0 and v.endpoints[1] == math.inf else 1.0)
    worst = max(checks)
    verdict("C7 fixed-point and axis golden values", worst <= TOL_GOLDEN,
            f"max deviation {worst:.3e} over {len(checks)} checks")


def test_c8_determinism():
    serial = report_json(build_spectrum(preset("modular"), workers=1, **MODULAR_RUN))
    parallel = report_json(build_spectrum(preset("modular"), workers=4, **MODULAR_RUN))
    verdict("C8 JSON identical at 1 and 4 workers", serial == parallel,
            f"{len(serial)} bytes, identical: {serial == parallel}")
