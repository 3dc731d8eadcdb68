"""Totients, the totient bound on denominators, and rational detection."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

QMAX = 200
EPS_RAT = 1e-9
MAX_DEN = 10 ** 6


@dataclass(frozen=True)
class RationalAngle:
    """An angle theta recognised as (p/q) * pi."""

    p: int
    q: int
    theta: float

    @property
    def error(self):
        return abs(self.theta - self.p * math.pi / self.q)

    def label(self):
        num = "π" if self.p == 1 else f"{self.p}π"
        return num if self.q == 1 else f"{num}/{self.q}"


def _check_positive(name, n):
    if int(n) != n or n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n!r}")


def euler_phi(q):
    _check_positive("q", q)
    n, result, p = int(q), int(q), 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def cyclotomic_degree(q):
    """Degree of Q(exp(2 pi i / q)) over Q."""
    return euler_phi(q)


def totient_bound_check(q, d):
    """Does a denominator q satisfy phi(q) <= 2 d for a degree bound d?"""
    _check_positive("d", d)
    return euler_phi(q) <= 2 * d


def admissible_q(d):
    """All q with phi(q) <= 2 d, ascending.

    phi(q) >= sqrt(q / 2) for every q, so the search can stop at 8 d^2.
    """
    _check_positive("d", d)
    return [q for q in range(1, 8 * d * d + 1) if euler_phi(q) <= 2 * d]


def _best_fraction(x, max_den):
    # limit_denominator walks convergents and semiconvergents
    return Fraction(x).limit_denominator(max_den)


def detect_rational_pi(theta, qmax=QMAX, eps=EPS_RAT):
    """Return p/q with q <= qmax if |theta - p pi / q| < eps, else None."""
    f = _best_fraction(theta / math.pi, qmax)
    if f.numerator <= 0 or abs(theta - f.numerator * math.pi / f.denominator) >= eps:
        return None
    return RationalAngle(f.numerator, f.denominator, theta)


def rationality_detect(x, max_den=MAX_DEN, eps=EPS_RAT):
    """Best p/q with q <= max_den, returned only if within eps of x."""
    f = _best_fraction(x, max_den)
    return f if abs(x - f) < eps else None
