import math

import numpy as np
import pytest

from anglespec import Geodesic, Moebius

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def matmul(m, n):
    """Plain 2x2 product on nested tuples; independent of Moebius.compose."""
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def random_sl2(rng, lo=-2.0, hi=2.0):
    while True:
        a, b, c = rng.uniform(lo, hi, size=3)
        if abs(a) > 0.2:
            return Moebius(a, b, c, (1 + b * c) / a)


def random_geodesic(rng):
    if rng.random() < 0.1:
        return Geodesic.vertical(rng.uniform(-10, 10), upward=bool(rng.random() < 0.5))
    return Geodesic.semicircle(rng.uniform(-10, 10), rng.uniform(0.1, 10),
                               reverse=bool(rng.random() < 0.5))


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


SQRT2 = math.sqrt(2)
SQRT5 = math.sqrt(5)
