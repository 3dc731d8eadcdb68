"""Geodesics of the upper half-plane, their crossings and crossing angles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

EPS_NUM = 1e-12
COS2_OVERSHOOT = 1e-9

INF = math.inf


class NoCrossing(ValueError):
    pass


class HPoint(NamedTuple):
    x: float
    y: float

    @property
    def z(self):
        return complex(self.x, self.y)


@dataclass(frozen=True)
class Geodesic:
    """A complete geodesic: a semicircle, or a vertical line when
    ``radius`` is None (``center`` is then the line's abscissa).

    The default orientation runs left to right along a semicircle and
    upward along a vertical line; ``reverse`` flips it.
    """

    center: float
    radius: float | None = None
    reverse: bool = False

    def __post_init__(self):
        if self.radius is not None and not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius!r}")

    @classmethod
    def semicircle(cls, center, radius, reverse=False):
        return cls(float(center), float(radius), reverse)

    @classmethod
    def vertical(cls, x, upward=True):
        return cls(float(x), None, not upward)

    @classmethod
    def from_endpoints(cls, start, end):
        """Geodesic running from boundary point ``start`` to ``end``."""
        if math.isinf(start) and math.isinf(end):
            raise ValueError("both endpoints at infinity")
        if math.isinf(end):
            return cls.vertical(start, upward=True)
        if math.isinf(start):
            return cls.vertical(end, upward=False)
        if start == end:
            raise ValueError("degenerate geodesic")
        return cls.semicircle((start + end) / 2, abs(end - start) / 2,
                              reverse=start > end)

    @property
    def is_vertical(self):
        return self.radius is None

    @property
    def endpoints(self):
        """Ideal endpoints in orientation order ``(start, end)``."""
        if self.is_vertical:
            pair = (self.center, INF)
        else:
            pair = (self.center - self.radius, self.center + self.radius)
        return pair[::-1] if self.reverse else pair

    def reversed(self):
        return Geodesic(self.center, self.radius, not self.reverse)

    def unoriented(self):
        return Geodesic(self.center, self.radius, False)

    def same_line(self, other, eps=EPS_NUM):
        if self.is_vertical != other.is_vertical:
            return False
        if abs(self.center - other.center) > eps:
            return False
        return self.is_vertical or abs(self.radius - other.radius) <= eps

    def image(self, boundary_map):
        """Image under an isometry given by its action on the boundary."""
        start, end = (boundary_map(p) for p in self.endpoints)
        return Geodesic.from_endpoints(start, end)

    def residual(self, p):
        """Zero exactly when ``p`` lies on the geodesic."""
        if self.is_vertical:
            return p.x - self.center
        return math.hypot(p.x - self.center, p.y) - self.radius

    def tangent(self, p):
        """Unit tangent at ``p`` (assumed on the geodesic), along the orientation."""
        if self.is_vertical:
            tx, ty = 0.0, 1.0
        else:
            # clockwise rotation of the radius vector: left to right over the top
            tx, ty = p.y / self.radius, -(p.x - self.center) / self.radius
        return (-tx, -ty) if self.reverse else (tx, ty)


def crosses(g1, g2, eps=EPS_NUM):
    """True iff the endpoint pairs strictly interleave on the boundary."""
    if g1.is_vertical and g2.is_vertical:
        return False
    if g1.is_vertical or g2.is_vertical:
        line, circ = (g1, g2) if g1.is_vertical else (g2, g1)
        return abs(line.center - circ.center) < circ.radius - eps
    d = abs(g1.center - g2.center)
    return abs(g1.radius - g2.radius) + eps < d < g1.radius + g2.radius - eps


def _height(radius, dx):
    # r^2 - dx^2 factored to limit cancellation near the real axis
    return math.sqrt(max((radius - dx) * (radius + dx), 0.0))


def intersection_point(g1, g2):
    if not crosses(g1, g2):
        raise NoCrossing("geodesics do not cross")
    if g1.is_vertical or g2.is_vertical:
        line, circ = (g1, g2) if g1.is_vertical else (g2, g1)
        x = line.center + 0.0  # no negative zero
        return HPoint(x, _height(circ.radius, x - circ.center))
    m1, r1, m2, r2 = g1.center, g1.radius, g2.center, g2.radius
    x = 0.5 * (m1 + m2) + 0.5 * (r1 - r2) * (r1 + r2) / (m2 - m1)
    # take the height from the circle whose center is farther from x
    if abs(x - m1) <= abs(x - m2):
        y = _height(r2, x - m2)
    else:
        y = _height(r1, x - m1)
    return HPoint(x + 0.0, y)


def angle_cos2(g1, g2):
    """cos^2 of the crossing angle, from centers and radii alone.

    Two semicircles: law of cosines on the triangle formed by both centers
    and the crossing point. Vertical line at v and semicircle (m, r):
    ((v - m) / r)^2.
    """
    if not crosses(g1, g2):
        raise NoCrossing("geodesics do not cross")
    if g1.is_vertical or g2.is_vertical:
        line, circ = (g1, g2) if g1.is_vertical else (g2, g1)
        value = ((line.center - circ.center) / circ.radius) ** 2
    else:
        r1, r2 = g1.radius, g2.radius
        d = abs(g1.center - g2.center)
        # every operation symmetric in (r1, r2), so swapping arguments is exact
        value = (r1 * r1 + r2 * r2 - d * d) ** 2 / (4 * (r1 * r2) ** 2)
    if value > 1 + COS2_OVERSHOOT:
        raise ArithmeticError(f"cos^2 evaluated to {value!r}")
    return min(max(value, 0.0), 1.0)


def oriented_angle(g1, g2, p=None):
    """Counterclockwise angle in (0, pi) from the tangent of g1 to that of g2."""
    if p is None:
        p = intersection_point(g1, g2)
    elif not crosses(g1, g2):
        raise NoCrossing("geodesics do not cross")
    t1x, t1y = g1.tangent(p)
    t2x, t2y = g2.tangent(p)
    phi = math.atan2(t1x * t2y - t1y * t2x, t1x * t2x + t1y * t2y)
    return phi % math.pi


def hyperbolic_distance(p, q):
    # 2 asinh form of arccosh(1 + |p - q|^2 / (2 p.y q.y)); accurate for tiny distances
    chord = math.hypot(p.x - q.x, p.y - q.y)
    return 2.0 * math.asinh(chord / (2.0 * math.sqrt(p.y * q.y)))
