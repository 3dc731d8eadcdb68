"""Intersections of closed geodesics on H^2 / G and the truncated angle
spectrum they produce."""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import arithmetic
from .geometry import HPoint, angle_cos2, crosses, intersection_point, oriented_angle
from .group import (
    ClosedGeodesicClass,
    EmptyGeneratorSet,
    GeneratorSet,
    enumerate_elements,
    hyperbolic_classes,
    primitive_root,
)
from .moebius import apply, compose, image, inverse, power

EPS_MERGE = 1e-6
EPS_THETA = 1e-6
EPS_CLUSTER = 1e-9


@dataclass(frozen=True)
class IntersectionRecord:
    """One intersection of two closed geodesics on the surface.

    ``point`` is the lift on the axis of ``class_i``'s representative,
    translated into its fundamental period; ``conjugator`` carries the
    axis of ``class_j``'s representative onto the crossing lift.
    """

    class_i: int
    class_j: int
    conjugator: tuple
    point: HPoint
    theta: float
    cos2: float


@dataclass(frozen=True)
class RationalHit:
    theta: float
    p: int
    q: int
    phi_q: int
    bound: int
    ok: bool

    def label(self):
        return arithmetic.RationalAngle(self.p, self.q, self.theta).label()


@dataclass
class SpectrumReport:
    params: dict
    generators: tuple
    classes: list
    records: list
    angle_set: list
    rational_hits: list = field(default_factory=list)

    @property
    def totient_ok(self):
        return all(h.ok for h in self.rational_hits)

    def hit_for(self, theta, eps):
        for h in self.rational_hits:
            if abs(h.theta - theta) <= eps:
                return h
        return None


class AxisFrame:
    """Arc-length coordinate along an oriented axis.

    ``s`` is signed hyperbolic distance from the axis' apex (the point at
    height 1 for a vertical line), increasing toward the attracting end.
    The fundamental period is ``-L/2 <= s < L/2``.
    """

    def __init__(self, geodesic, period):
        self.period = period
        alpha, beta = geodesic.endpoints
        if math.isinf(alpha):
            self._f = (0.0, -1.0, 1.0, -beta)
        elif math.isinf(beta):
            self._f = (1.0, -alpha, 0.0, 1.0)
        elif beta > alpha:
            self._f = (1.0, -alpha, -1.0, beta)
        else:
            self._f = (-1.0, alpha, -1.0, beta)
        if geodesic.is_vertical:
            apex = complex(geodesic.center, 1.0)
        else:
            apex = complex(geodesic.center, geodesic.radius)
        self._t0 = abs(self._to_frame(apex))

    def _to_frame(self, z):
        a, b, c, d = self._f
        return (a * z + b) / (c * z + d)

    def displacement(self, z):
        return math.log(abs(self._to_frame(z)) / self._t0)

    def point(self, s):
        a, b, c, d = self._f
        w = 1j * self._t0 * math.exp(s)
        z = (d * w - b) / (-c * w + a)
        return HPoint(z.real, z.imag)

    def normalize(self, s):
        """``(s', k)`` with ``s' = s - k L`` inside the fundamental period."""
        k = math.floor((s + self.period / 2) / self.period)
        return s - k * self.period, k

    def gap(self, s1, s2):
        d = abs(s1 - s2) % self.period
        return min(d, self.period - d)


class _ConjugateAxes:
    """Oriented endpoints of g(axis) for every conjugator g, as arrays."""

    def __init__(self, klass, conjugators, mats):
        self.klass = klass
        start, end = klass.axis.endpoints
        self.start = _act(mats, start)
        self.end = _act(mats, end)


def _act(mats, x):
    a, b, c, d = mats.T
    with np.errstate(divide="ignore", invalid="ignore"):
        if math.isinf(x):
            out = np.where(c == 0, np.inf, a / c)
        else:
            den = c * x + d
            out = np.where(den == 0, np.inf, (a * x + b) / den)
    return np.where(np.isinf(out), np.inf, out)


def _candidates(axis, conj):
    """Indices of conjugates whose axis may cross ``axis`` (loose test)."""
    e1, e2 = conj.start, conj.end
    if axis.is_vertical:
        v = axis.center
        finite = np.isfinite(e1) & np.isfinite(e2)
        mask = finite & (np.sign(np.where(finite, e1 - v, 0.0))
                         * np.sign(np.where(finite, e2 - v, 0.0)) < 0)
    else:
        lo, hi = axis.center - axis.radius, axis.center + axis.radius
        ins1 = (lo < e1) & (e1 < hi)
        ins2 = (lo < e2) & (e2 < hi)
        mask = ins1 ^ ins2
    return np.flatnonzero(mask)


def _crossing(axis, frame, g, delta_axis):
    other = image(g, delta_axis)
    if not crosses(axis, other):
        return None
    p = intersection_point(axis, other)
    if not p.y > 0:
        return None
    return other, p, frame.displacement(p.z)


def _pair_records(gamma, delta, conjugators, conj, eps_merge=EPS_MERGE, gens=None):
    axis = gamma.axis
    frame = AxisFrame(axis, gamma.period)
    self_pair = gamma.index == delta.index
    seen = []
    records = []
    for idx in _candidates(axis, conj):
        g = conjugators[idx]
        hit = _crossing(axis, frame, g, delta.axis)
        if hit is None:
            continue
        _, k = frame.normalize(hit[2])
        if k:
            # far along the axis the crossing is ill-conditioned; pull the
            # conjugator back by whole periods and recompute near the apex
            g2 = compose(power(gamma.shift, -k), g)
            if gens is not None and g2.word is not None:
                # cancellation leaves round-off; rebuild from the reduced word
                g2 = gens.evaluate(g2.word)
            hit2 = _crossing(axis, frame, g2, delta.axis)
            if hit2 is not None:
                g, hit = g2, hit2
        other, p, s = hit
        s, _ = frame.normalize(s)
        theta = oriented_angle(axis, other, p)
        if any(frame.gap(s, s2) < eps_merge and abs(theta - t2) < EPS_THETA
               for s2, t2 in seen):
            continue
        seen.append((s, theta))
        if self_pair:
            # the same crossing seen from the other branch: g^-1(p) with pi - theta
            q = apply(inverse(g), p.z)
            s2, _ = frame.normalize(frame.displacement(q))
            seen.append((s2, math.pi - theta))
        records.append(IntersectionRecord(
            class_i=gamma.index,
            class_j=delta.index,
            conjugator=g.word,
            point=p,
            theta=theta,
            cos2=angle_cos2(axis, other),
        ))
    return records


def with_primitive_root(klass, elements):
    """Attach the shortest enumerated root, so points are taken modulo the
    primitive period rather than the class representative's."""
    root, k = primitive_root(klass.rep, None, 0, elements=elements)
    return replace(klass, root=root) if k > 1 else klass


def _matrices(elements):
    return np.array([m.entries for m in elements], dtype=float)


def surface_intersections(gamma, delta, gens, conj_len, eps_merge=EPS_MERGE,
                          conjugators=None):
    """Distinct surface intersections of the closed geodesics of two classes
    found with conjugators of word length <= conj_len."""
    if conj_len < 0:
        raise ValueError("conj_len must be >= 0")
    if conjugators is None:
        conjugators = enumerate_elements(gens, conj_len)
    conj = _ConjugateAxes(delta, conjugators, _matrices(conjugators))
    return _pair_records(gamma, delta, conjugators, conj, eps_merge, gens)


def angle_set(records, eps_cluster=EPS_CLUSTER):
    """Single-linkage clusters of angles as ``(centroid, size)``, ascending."""
    if not eps_cluster > 0:
        raise ValueError("eps_cluster must be positive")
    thetas = sorted(getattr(r, "theta", r) for r in records)
    out = []
    group = []
    for t in thetas:
        if group and t - group[-1] > eps_cluster:
            out.append((math.fsum(group) / len(group), len(group)))
            group = []
        group.append(t)
    if group:
        out.append((math.fsum(group) / len(group), len(group)))
    return out


# worker state for process pools; set once per worker by _init_worker
_STATE = {}


def _init_worker(gens, classes, conjugators, axes, eps_merge):
    _STATE.update(gens=gens, classes=classes, conjugators=conjugators, axes=axes,
                  eps_merge=eps_merge)


def _pair_task(pair):
    i, j = pair
    st = _STATE
    return _pair_records(st["classes"][i], st["classes"][j], st["conjugators"],
                         st["axes"][j], st["eps_merge"], st["gens"])


def build_spectrum(gens, max_word_len, max_trace, conj_len, qmax=arithmetic.QMAX,
                   eps_rat=arithmetic.EPS_RAT, eps_cluster=EPS_CLUSTER,
                   degree_bound=None, oriented=False, workers=1,
                   eps_merge=EPS_MERGE):
    """Enumerate classes, intersect every unordered pair (self-pairs
    included), cluster the angles and test each for being a rational
    multiple of pi against the totient bound.

    Results do not depend on ``workers``: pairs are evaluated independently
    and gathered in a fixed order.
    """
    if not isinstance(gens, GeneratorSet):
        gens = list(gens)
        if not gens:
            raise EmptyGeneratorSet("no generators")
        gens = GeneratorSet(tuple(gens))
    if degree_bound is None:
        degree_bound = gens.degree_bound
    if conj_len < 0 or max_word_len < 0:
        raise ValueError("word lengths must be >= 0")

    elements = enumerate_elements(gens, max_word_len)
    conjugators = enumerate_elements(gens, conj_len)
    classes = hyperbolic_classes(gens, max_word_len, max_trace, oriented=oriented,
                                 elements=elements)
    pool = elements if len(elements) >= len(conjugators) else conjugators
    classes = [with_primitive_root(c, pool) for c in classes]
    mats = _matrices(conjugators)
    axes = [_ConjugateAxes(c, conjugators, mats) for c in classes]
    pairs = [(i, j) for i in range(len(classes)) for j in range(i, len(classes))]

    if workers and workers > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                 initargs=(gens, classes, conjugators, axes, eps_merge)) as ex:
            chunk = max(1, len(pairs) // (4 * workers))
            per_pair = list(ex.map(_pair_task, pairs, chunksize=chunk))
    else:
        per_pair = [_pair_records(classes[i], classes[j], conjugators, axes[j], eps_merge,
                                  gens)
                    for i, j in pairs]
    records = [r for rs in per_pair for r in rs]

    clusters = angle_set(records, eps_cluster)
    hits = []
    for theta, _ in clusters:
        rat = arithmetic.detect_rational_pi(theta, qmax, eps_rat)
        if rat is None:
            continue
        phi = arithmetic.euler_phi(rat.q)
        hits.append(RationalHit(theta, rat.p, rat.q, phi, 2 * degree_bound,
                                arithmetic.totient_bound_check(rat.q, degree_bound)))

    params = {
        "group": gens.name,
        "max_word_len": max_word_len,
        "max_trace": max_trace,
        "conj_len": conj_len,
        "qmax": qmax,
        "eps_rat": eps_rat,
        "eps_cluster": eps_cluster,
        "eps_merge": eps_merge,
        "degree_bound": degree_bound,
        "oriented": oriented,
        "multiplicity": "one per (unordered class pair, surface point)",
    }
    return SpectrumReport(params, gens.gens, classes, records, clusters, hits)


def default_workers():
    return os.cpu_count() or 1
