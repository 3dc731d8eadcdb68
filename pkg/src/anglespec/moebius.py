"""Elements of PSL(2,R) acting on the upper half-plane.

Matrices are kept projectively normalized so that M and -M compare equal.
Boundary points are real floats, with ``math.inf`` standing for the point
at infinity.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .geometry import Geodesic

EPS_DET = 1e-9
EPS_CLASS = 1e-9
EPS_NUM = 1e-12
RENORM_LIMIT = 1e6

INF = math.inf


class NotHyperbolic(ValueError):
    pass


class ElementClass(enum.Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


def reduce_word(word):
    """Freely reduce a word of signed generator indices."""
    out = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def invert_word(word):
    return tuple(-x for x in reversed(word))


def _normalize(a, b, c, d):
    t = a + d
    if t < 0 or (t == 0 and (c < 0 or (c == 0 and a < 0))):
        return -a, -b, -c, -d
    return a, b, c, d


@dataclass(frozen=True)
class Moebius:
    """A unit-determinant real 2x2 matrix [[a, b], [c, d]], up to sign.

    ``word`` optionally records how the element was built from generators:
    letter ``k`` is generator ``k - 1`` and ``-k`` is its inverse.
    """

    a: float
    b: float
    c: float
    d: float
    word: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        a, b, c, d = (float(x) for x in (self.a, self.b, self.c, self.d))
        det = a * d - b * c
        if not abs(det - 1.0) <= EPS_DET * max(1.0, abs(a * d), abs(b * c)):
            raise ValueError(f"determinant {det!r} is not 1")
        for name, value in zip("abcd", _normalize(a, b, c, d)):
            object.__setattr__(self, name, value)
        if self.word is not None:
            object.__setattr__(self, "word", reduce_word(self.word))

    @classmethod
    def from_matrix(cls, m, word=None):
        (a, b), (c, d) = m
        return cls(a, b, c, d, word)

    @property
    def trace(self):
        return self.a + self.d

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def matrix(self):
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, other):
        return compose(self, other)

    def __call__(self, z):
        return apply(self, z)


IDENTITY = Moebius(1.0, 0.0, 0.0, 1.0, ())


def projective_distance(m, n):
    """Max-entry distance between M and the closer of N, -N."""
    plus = max(abs(x - y) for x, y in zip(m.entries, n.entries))
    minus = max(abs(x + y) for x, y in zip(m.entries, n.entries))
    return min(plus, minus)


def compose(m, n):
    word = None
    if m.word is not None and n.word is not None:
        word = m.word + n.word
    a = m.a * n.a + m.b * n.c
    b = m.a * n.b + m.b * n.d
    c = m.c * n.a + m.d * n.c
    d = m.c * n.b + m.d * n.d
    # renormalize to det 1 so long products do not drift, but only while
    # ad - bc is well conditioned; for large entries it cancels to noise
    if max(abs(a * d), abs(b * c)) <= RENORM_LIMIT:
        s = math.sqrt(abs(a * d - b * c))
        a, b, c, d = a / s, b / s, c / s, d / s
    return Moebius(a, b, c, d, word)


def inverse(m):
    word = None if m.word is None else invert_word(m.word)
    return Moebius(m.d, -m.b, -m.c, m.a, word)


def mirror(m, letter_map=None):
    """Conjugate by the reflection z -> -conj(z).

    Words are carried over only when ``letter_map`` says where each letter
    goes under the reflection; otherwise the word is dropped.
    """
    word = None
    if m.word is not None and letter_map is not None:
        word = tuple(letter_map[x] for x in m.word)
    return Moebius(m.a, -m.b, -m.c, m.d, word)


def power(m, k):
    if k < 0:
        return power(inverse(m), -k)
    out = Moebius(1.0, 0.0, 0.0, 1.0, () if m.word is not None else None)
    for _ in range(k):
        out = compose(out, m)
    return out


def conjugate(g, m):
    """g m g^-1"""
    return compose(compose(g, m), inverse(g))


def is_identity(m, eps=EPS_CLASS):
    return projective_distance(m, IDENTITY) <= eps


def classify(m, eps=EPS_CLASS):
    t = abs(m.trace)
    if t > 2 + eps:
        return ElementClass.HYPERBOLIC
    if is_identity(m, eps):
        return ElementClass.IDENTITY
    if abs(t - 2) <= eps:
        return ElementClass.PARABOLIC
    return ElementClass.ELLIPTIC


def _require_hyperbolic(m):
    if classify(m) is not ElementClass.HYPERBOLIC:
        raise NotHyperbolic(f"trace {m.trace!r} is not hyperbolic")


def apply(m, z):
    """Action on the upper half-plane (complex z) or on the boundary.

    A real ``z`` (including ``inf``) is treated as a boundary point.
    """
    if isinstance(z, complex):
        return (m.a * z + m.b) / (m.c * z + m.d)
    return apply_boundary(m, z)


def apply_boundary(m, x):
    if math.isinf(x):
        return INF if m.c == 0 else m.a / m.c
    den = m.c * x + m.d
    if den == 0:
        return INF
    return (m.a * x + m.b) / den


def _fixes_infinity(m):
    # c below rounding level: the far fixed point (a - d)/c is beyond float reach
    return abs(m.c) <= EPS_NUM * max(abs(m.a), abs(m.d)) * EPS_NUM


def fixed_points(m):
    """Return ``(repelling, attracting)`` fixed points of a hyperbolic M."""
    _require_hyperbolic(m)
    a, b, c, d = m.entries
    if _fixes_infinity(m):
        x = b / (d - a)
        # z -> (a/d) z + b/d expands when |a| > |d|
        return (x, INF) if abs(a) > abs(d) else (INF, x)
    disc = math.sqrt(m.trace ** 2 - 4.0)
    # roots of c z^2 + (d - a) z - b = 0, in the cancellation-free form
    q = 0.5 * ((a - d) + math.copysign(disc, a - d))
    r1, r2 = q / c, -b / q
    # derivative of the action at a fixed point z is 1/(cz + d)^2
    if abs(c * r2 + d) > abs(c * r1 + d):
        return r1, r2
    return r2, r1


def translation_length(m):
    _require_hyperbolic(m)
    return 2.0 * math.acosh(abs(m.trace) / 2.0)


def axis(m):
    """The invariant geodesic of M, oriented from repelling to attracting."""
    _require_hyperbolic(m)
    a, b, c, d = m.entries
    rep, att = fixed_points(m)
    if _fixes_infinity(m):
        return Geodesic.vertical(b / (d - a), upward=math.isinf(att))
    center = (a - d) / (2 * c)
    radius = math.sqrt(m.trace ** 2 - 4.0) / (2 * abs(c))
    return Geodesic.semicircle(center, radius, reverse=rep > att)


def image(g, geodesic):
    """The geodesic g(G), oriented by the transported endpoints."""
    return geodesic.image(lambda x: apply_boundary(g, x))
