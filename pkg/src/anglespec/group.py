"""Finitely generated subgroups of PSL(2,R): words, conjugacy classes of
hyperbolic elements, ping-pong certificates and named presets.

Words use signed 1-based letters: ``k`` is generator ``k - 1`` and ``-k``
its inverse. Enumeration order is by length, then lexicographic with the
letter order 1 < -1 < 2 < -2 < ...
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass

from .geometry import Geodesic
from .moebius import (
    IDENTITY,
    ElementClass,
    Moebius,
    NotHyperbolic,
    apply_boundary,
    axis,
    classify,
    compose,
    conjugate,
    fixed_points,
    inverse,
    is_identity,
    power,
    projective_distance,
    translation_length,
)

EPS_DEDUP = 1e-7
EPS_TRACE = 1e-7
EPS_REGION = 1e-12

INF = math.inf


class EmptyGeneratorSet(ValueError):
    pass


class UnknownPreset(KeyError):
    pass


class RegionOverlap(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of a group, plus what the rest of the package needs to
    know about it: the declared degree bound for the totient test, optional
    ping-pong regions, and the reflection's action on letters if the set is
    mirror-closed."""

    gens: tuple
    name: str | None = None
    degree_bound: int = 1
    regions: tuple | None = None
    mirror_letters: tuple | None = None

    def __post_init__(self):
        if not self.gens:
            raise EmptyGeneratorSet("a generator set needs at least one generator")
        gens = []
        for i, g in enumerate(self.gens):
            if is_identity(g):
                raise ValueError(f"generator {i} is the identity")
            gens.append(Moebius(g.a, g.b, g.c, g.d, (i + 1,)))
        object.__setattr__(self, "gens", tuple(gens))
        if int(self.degree_bound) != self.degree_bound or self.degree_bound < 1:
            raise ValueError(f"degree bound must be a positive integer, got {self.degree_bound!r}")

    def __len__(self):
        return len(self.gens)

    def letters(self):
        return [s * (i + 1) for i in range(len(self.gens)) for s in (1, -1)]

    def letter(self, x):
        g = self.gens[abs(x) - 1]
        return g if x > 0 else inverse(g)

    def evaluate(self, word):
        m = Moebius(1.0, 0.0, 0.0, 1.0, ())
        for x in word:
            m = compose(m, self.letter(x))
        return m


@dataclass(frozen=True)
class ClosedGeodesicClass:
    index: int
    rep: Moebius
    trace: float
    length: float
    axis: Geodesic
    root: Moebius | None = None

    @property
    def period(self):
        """Length of the primitive geodesic underlying this class."""
        return self.length if self.root is None else translation_length(self.root)

    @property
    def shift(self):
        """Element translating along the axis by one period."""
        return self.rep if self.root is None else self.root

    @classmethod
    def from_element(cls, rep, index=0):
        if classify(rep) is not ElementClass.HYPERBOLIC:
            raise NotHyperbolic(f"trace {rep.trace!r} is not hyperbolic")
        return cls(index, rep, abs(rep.trace), translation_length(rep), axis(rep))

    @property
    def word(self):
        return self.rep.word


def word_key(word):
    return (len(word), tuple((abs(x), x < 0) for x in word))


def word_label(word, names=None):
    """Human-readable word, e.g. ``T S T^-1``."""
    if not word:
        return "1"
    out = []
    for x in word:
        name = names[abs(x) - 1] if names else f"g{abs(x)}"
        out.append(name if x > 0 else f"{name}^-1")
    return " ".join(out)


class ProjectiveIndex:
    """Lookup of elements up to sign within a max-entry tolerance."""

    def __init__(self, eps=EPS_DEDUP):
        self.eps = eps
        self._cells = defaultdict(list)

    def _key(self, entries):
        return tuple(math.floor(x / self.eps) for x in entries)

    def add(self, m, value):
        self._cells[self._key(m.entries)].append((m, value))

    def find(self, m):
        for sign in (1.0, -1.0):
            key = self._key(tuple(sign * x for x in m.entries))
            for off in itertools.product((-1, 0, 1), repeat=4):
                cell = self._cells.get(tuple(k + o for k, o in zip(key, off)))
                if not cell:
                    continue
                for other, value in cell:
                    if projective_distance(m, other) < self.eps:
                        return value
        return None

    def __contains__(self, m):
        return self.find(m) is not None


def iter_words(gens, max_len):
    """All freely reduced words of length <= max_len with their matrices."""
    letters = gens.letters()
    letters.sort(key=lambda x: (abs(x), x < 0))
    level = [Moebius(1.0, 0.0, 0.0, 1.0, ())]
    yield level[0]
    for _ in range(max_len):
        nxt = []
        for m in level:
            last = m.word[-1] if m.word else 0
            for x in letters:
                if x != -last:
                    nxt.append(compose(m, gens.letter(x)))
        for m in nxt:
            yield m
        level = nxt


def enumerate_elements(gens, max_len, eps=EPS_DEDUP):
    """Distinct elements with word length <= max_len, shortest word first.

    Words that evaluate to the same projective matrix are merged, keeping
    the first in enumeration order.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    index = ProjectiveIndex(eps)
    out = []
    for m in iter_words(gens, max_len):
        if m in index:
            continue
        index.add(m, len(out))
        out.append(m)
    return out


def _cyclically_reduced(word):
    return len(word) < 2 or word[0] != -word[-1]


def _oriented_rep(m):
    """Of M and M^-1, the one whose attracting fixed point is larger."""
    mi = inverse(m)
    return m if fixed_points(m)[1] >= fixed_points(mi)[1] else mi


def hyperbolic_classes(gens, max_len, max_trace, oriented=False,
                       elements=None, eps=EPS_DEDUP):
    """One representative per conjugacy class of hyperbolic elements with
    |trace| <= max_trace among words of length <= max_len.

    Conjugacy is tested against enumerated conjugators only, so classes
    that are conjugate through a longer word may appear twice. Unless
    ``oriented`` is set, a class and its inverse are merged.
    """
    if not max_trace > 2:
        raise ValueError(f"max_trace must exceed 2, got {max_trace!r}")
    if elements is None:
        elements = enumerate_elements(gens, max_len, eps)
    found = []
    indexes = []
    for m in elements:
        if not _cyclically_reduced(m.word):
            continue
        t = abs(m.trace)
        if classify(m) is not ElementClass.HYPERBOLIC or t > max_trace:
            continue
        seen = False
        for k, c in enumerate(found):
            if abs(c.trace - t) > EPS_TRACE:
                continue
            if indexes[k] is None:
                indexes[k] = _conjugate_index(c.rep, elements, oriented, eps)
            if m in indexes[k]:
                seen = True
                break
        if seen:
            continue
        rep = m if oriented else _oriented_rep(m)
        found.append(ClosedGeodesicClass.from_element(rep, len(found)))
        indexes.append(None)
    return found


def _conjugate_index(rep, conjugators, oriented, eps):
    index = ProjectiveIndex(eps)
    targets = [rep] if oriented else [rep, inverse(rep)]
    for g in conjugators:
        for r in targets:
            index.add(conjugate(g, r), g.word)
    return index


def primitive_root(m, gens, max_len, elements=None):
    """Find P among enumerated elements, of least translation length, with
    P^k = M for some k >= 2. Returns ``(M, 1)`` if there is none."""
    length = translation_length(m)
    if elements is None:
        elements = enumerate_elements(gens, max_len)
    candidates = []
    for p in elements:
        if classify(p) is not ElementClass.HYPERBOLIC:
            continue
        lp = translation_length(p)
        k = round(length / lp)
        if k >= 2 and abs(k * lp - length) <= 1e-7 * length:
            candidates.append((lp, word_key(p.word), p, k))
    candidates.sort(key=lambda c: c[:2])
    for _, _, p, k in candidates:
        pk = power(p, k)
        scale = max(1.0, *(abs(x) for x in m.entries))
        if projective_distance(pk, m) <= EPS_DEDUP * scale:
            return p, k
    return m, 1


# -- ping-pong ----------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    certified: bool
    reason: str | None = None

    def __bool__(self):
        return self.certified


def _point(x):
    return INF if math.isinf(x) else float(x)


def _on_arc(x, arc):
    """Closed arc from ``arc[0]`` counterclockwise (increasing x) to ``arc[1]``."""
    s, e = arc
    if s <= e:
        return s <= x <= e
    return x >= s or x <= e


def _inside_arc(x, arc):
    return _on_arc(x, arc) and x != arc[0] and x != arc[1]


def _arcs_meet(a1, a2):
    return any(_on_arc(x, a2) for x in a1) or any(_on_arc(x, a1) for x in a2)


def _widen(arc, eps):
    # regions built to touch exactly should survive rounding in the images
    return tuple(x if math.isinf(x) else x + sgn * eps * max(1.0, abs(x))
                 for x, sgn in zip(arc, (-1, 1)))


def _arc_within(inner, outer, eps=0.0):
    outer = _widen(outer, eps)
    if not (_on_arc(inner[0], outer) and _on_arc(inner[1], outer)):
        return False
    return not _inside_arc(outer[0], inner)


def ping_pong_certificate(gens, regions=None, eps=EPS_REGION):
    """Check the ping-pong condition for ``regions``.

    ``regions[k]`` is ``(attracting_arc, repelling_arc)`` for generator k,
    each a closed boundary arc ``(start, end)`` running through increasing
    x (possibly through infinity). Certified when every generator is
    hyperbolic and maps the complement of its repelling arc into its
    attracting arc (up to a relative slack ``eps``); the group is then free
    on the generators and discrete.
    """
    if regions is None:
        regions = gens.regions
    if regions is None or len(regions) != len(gens):
        raise ValueError("need one (attracting, repelling) pair per generator")
    arcs = [tuple(_point(x) for x in arc) for pair in regions for arc in pair]
    for i, j in itertools.combinations(range(len(arcs)), 2):
        if _arcs_meet(arcs[i], arcs[j]):
            raise RegionOverlap(f"regions {arcs[i]} and {arcs[j]} intersect")
    for k, g in enumerate(gens.gens):
        kind = classify(g)
        if kind is not ElementClass.HYPERBOLIC:
            return Verdict(False, f"{kind.value} generator {k}")
    for k, g in enumerate(gens.gens):
        att, rep = arcs[2 * k], arcs[2 * k + 1]
        # the complement of rep runs from rep's end round to rep's start
        img = (apply_boundary(g, rep[1]), apply_boundary(g, rep[0]))
        img = tuple(_point(x) for x in img)
        if not _arc_within(img, att, eps):
            return Verdict(False, f"generator {k} does not map the complement "
                                  f"of {rep} into {att}")
    return Verdict(True)


# -- presets --------------------------------------------------------------

def _modular():
    s = Moebius(0, -1, 1, 0)
    t = Moebius(1, 1, 0, 1)
    return GeneratorSet((s, t), name="modular", degree_bound=1)


def _symmetric_schottky():
    a = Moebius(4, 0, 0, 0.25)
    b = Moebius(3, 4, 2, 3)
    regions = (((4.0, -4.0), (-0.25, 0.25)),
               ((1.0, 2.0), (-2.0, -1.0)))
    # reflection fixes A and swaps B with B^-1
    mirror_letters = ((1, 1), (-1, -1), (2, -2), (-2, 2))
    return GeneratorSet((a, b), name="symmetric-schottky", degree_bound=1,
                        regions=regions, mirror_letters=mirror_letters)


PRESETS = {
    "modular": _modular,
    "symmetric-schottky": _symmetric_schottky,
}


def preset(name):
    try:
        return PRESETS[name]()
    except KeyError:
        raise UnknownPreset(name) from None


def conjugate_generators(gens, g, name=None):
    """The generator set g G g^-1, with regions transported by g."""
    new = tuple(conjugate(Moebius(*g.entries), Moebius(*x.entries)) for x in gens.gens)
    regions = None
    if gens.regions is not None:
        regions = tuple(tuple(tuple(apply_boundary(g, x) for x in arc) for arc in pair)
                        for pair in gens.regions)
    return GeneratorSet(new, name=name or f"conjugate of {gens.name}",
                        degree_bound=gens.degree_bound, regions=regions)
