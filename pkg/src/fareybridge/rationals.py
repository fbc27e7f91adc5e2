"""Exact arithmetic on extended rationals p/q, including 1/0.

Slopes are kept in canonical form (gcd(p, q) = 1, q >= 0, and p = 1 when
q = 0) so that equality and hashing are structural.  Continued fractions
here always mean the "reciprocal" form

    [a1, ..., an] = 1 / (a1 + 1 / (a2 + ... + 1 / an))

which parametrizes slopes in [0, 1): the empty sequence is 0/1, and the
positive-remainder Euclidean algorithm produces the canonical expansion
(all entries >= 1, last entry >= 2 when there are two or more).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Sequence

from .errors import DomainError

__all__ = [
    "ExtendedRational",
    "ContinuedFraction",
    "MobiusMap",
    "reduce",
    "parse_slope",
    "det",
    "is_adjacent",
    "mediant",
    "cf_expand",
    "cf_eval",
    "convergents",
    "mobius_apply",
    "normalize_pair",
    "INFINITY",
    "ZERO",
]

_SLOPE_RE = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")


@total_ordering
@dataclass(frozen=True, slots=True)
class ExtendedRational:
    """A slope p/q in lowest terms; q = 0 encodes the point at infinity.

    The constructor rejects non-canonical input; use reduce() to normalize
    arbitrary integer pairs.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.q < 0:
            raise DomainError(f"denominator must be non-negative: {self.p}/{self.q}")
        if self.q == 0:
            if self.p != 1:
                raise DomainError(f"infinity must be written 1/0, got {self.p}/0")
        elif math.gcd(self.p, self.q) != 1:
            raise DomainError(f"not in lowest terms: {self.p}/{self.q}")

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __repr__(self) -> str:
        return f"ExtendedRational({self.p}, {self.q})"

    def __lt__(self, other: "ExtendedRational") -> bool:
        # Cross-multiplication is valid because q, s >= 0; 1/0 sorts above
        # every finite slope, giving a total order on the vertex set.
        if self == other:
            return False
        return self.p * other.q < other.p * self.q

    def floor(self) -> int:
        """Integer part, finite slopes only.

        >>> reduce(-3, 10).floor()
        -1
        """
        if self.is_infinity:
            raise DomainError("floor of 1/0 is undefined")
        return self.p // self.q


INFINITY = ExtendedRational(1, 0)
ZERO = ExtendedRational(0, 1)


def reduce(p: int, q: int) -> ExtendedRational:
    """Normalize an integer pair to a canonical slope.

    >>> reduce(4, 6)
    ExtendedRational(2, 3)
    >>> reduce(-3, 0)
    ExtendedRational(1, 0)
    """
    if p == 0 and q == 0:
        raise DomainError("0/0 is not a slope")
    g = math.gcd(p, q)
    p, q = p // g, q // g
    if q < 0:
        p, q = -p, -q
    if q == 0:
        p = 1
    return ExtendedRational(p, q)


def parse_slope(text: str) -> ExtendedRational:
    """Parse 'p/q' (or a bare integer) into a canonical slope."""
    m = _SLOPE_RE.match(text.strip())
    if not m:
        raise DomainError(f"cannot parse slope: {text!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    return reduce(p, q)


def det(x: ExtendedRational, y: ExtendedRational) -> int:
    """Determinant p*s - q*r of the pair (p/q, r/s).

    >>> det(reduce(79, 182), ExtendedRational(1, 0))
    -182
    """
    return x.p * y.q - x.q * y.p


def is_adjacent(x: ExtendedRational, y: ExtendedRational) -> bool:
    """Farey adjacency: |det| = 1."""
    return abs(det(x, y)) == 1


def mediant(x: ExtendedRational, y: ExtendedRational) -> ExtendedRational:
    """Mediant (p+r)/(q+s); already reduced when x, y are Farey-adjacent."""
    return reduce(x.p + y.p, x.q + y.q)


@dataclass(frozen=True, slots=True)
class ContinuedFraction:
    """Canonical expansion [a1, ..., an] of a slope in [0, 1).

    Invariant: every entry >= 1 and the last entry >= 2, so distinct
    canonical sequences evaluate to distinct slopes in [0, 1).
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        es = tuple(self.entries)
        object.__setattr__(self, "entries", es)
        if any(a < 1 for a in es):
            raise DomainError(f"entries must be positive: {list(es)}")
        if es and es[-1] < 2:
            raise DomainError(f"canonical form requires last entry >= 2: {list(es)}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.entries) + "]"


def cf_expand(x: ExtendedRational) -> ContinuedFraction:
    """Canonical continued fraction of a slope in [0, 1).

    Positive-remainder Euclid: the quotient sequence of (q, p) is exactly
    the expansion, and it lands in canonical form automatically.

    >>> cf_expand(reduce(79, 182)).entries
    (2, 3, 3, 2, 3)
    >>> cf_expand(reduce(3, 10)).entries
    (3, 3)
    >>> cf_expand(ExtendedRational(0, 1)).entries
    ()
    """
    if x.is_infinity or x.p < 0 or x.p >= x.q:
        raise DomainError(f"cf_expand requires 0 <= p/q < 1, got {x}")
    entries = []
    p, q = x.p, x.q
    while p:
        a, r = divmod(q, p)
        entries.append(a)
        p, q = r, p
    return ContinuedFraction(tuple(entries))


def cf_eval(entries: ContinuedFraction | Sequence[int]) -> ExtendedRational:
    """Evaluate [a1, ..., an] exactly; the empty sequence is 0/1.

    Accepts any positive-entry sequence, canonical or not (e.g. [3, 1]
    evaluates to the same slope as [4]).

    >>> cf_eval([2, 4, 1, 3])
    ExtendedRational(19, 42)
    >>> cf_eval([2, 3, 3, 2, 3])
    ExtendedRational(79, 182)
    """
    if isinstance(entries, ContinuedFraction):
        es = entries.entries
    else:
        es = tuple(entries)
        if any(a < 1 for a in es):
            raise DomainError(f"entries must be positive: {list(es)}")
    p, q = 0, 1
    for a in reversed(es):
        p, q = q, a * q + p
    return ExtendedRational(p, q)


def convergents(entries: ContinuedFraction | Sequence[int]) -> tuple[ExtendedRational, ...]:
    """Prefix evaluations [a1], [a1,a2], ..., ending at the slope itself.

    Consecutive convergents are Farey-adjacent, which is what makes them
    the skeleton of the geodesic machinery downstream.

    >>> [str(c) for c in convergents([2, 3, 3, 2, 3])]
    ['1/2', '3/7', '10/23', '23/53', '79/182']
    """
    es = entries.entries if isinstance(entries, ContinuedFraction) else tuple(entries)
    if any(a < 1 for a in es):
        raise DomainError(f"entries must be positive: {list(es)}")
    out = []
    h0, k0, h1, k1 = 1, 0, 0, 1  # h/k pairs for c_{-1} = 1/0 and c_0 = 0/1
    for a in es:
        h0, k0, h1, k1 = h1, k1, a * h1 + h0, a * k1 + k0
        out.append(ExtendedRational(h1, k1))
    return tuple(out)


@dataclass(frozen=True, slots=True)
class MobiusMap:
    """Unimodular map x -> (a x + b) / (c x + d) with det = ad - bc = +-1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c not in (1, -1):
            raise DomainError(
                f"matrix [[{self.a},{self.b}],[{self.c},{self.d}]] is not unimodular"
            )

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, k: int) -> "MobiusMap":
        """x -> x + k; fixes 1/0."""
        return cls(1, k, 0, 1)

    def apply(self, x: ExtendedRational) -> ExtendedRational:
        """Projective action on slopes.

        >>> MobiusMap(1, 1, 0, 1).apply(reduce(1, 2))
        ExtendedRational(3, 2)
        >>> MobiusMap(0, 1, 1, 0).apply(ExtendedRational(1, 0))
        ExtendedRational(0, 1)
        """
        return reduce(self.a * x.p + self.b * x.q, self.c * x.p + self.d * x.q)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """Matrix product: (self.compose(other))(x) = self(other(x))."""
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MobiusMap":
        # [[d,-b],[-c,a]] inverts up to the +-1 determinant, which acts
        # trivially on slopes.
        return MobiusMap(self.d, -self.b, -self.c, self.a)


def mobius_apply(m: MobiusMap, x: ExtendedRational) -> ExtendedRational:
    """Function form of MobiusMap.apply."""
    return m.apply(x)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, u, v) with u*a + v*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_u, u = u, old_u - qt * u
        old_v, v = v, old_v - qt * v
    return old_r, old_u, old_v


def normalize_pair(
    x: ExtendedRational, y: ExtendedRational
) -> tuple[MobiusMap, ExtendedRational]:
    """Unimodular m with m(x) = 1/0 and m(y) in [0, 1); returns (m, m(y)).

    The image m(y) does not depend on which gcd cofactors are picked: maps
    fixing 1/0 are integer translations and [0, 1) is a fundamental domain
    for them.  Everything computed downstream is invariant under the
    simultaneous action, so any valid normalizer gives the same answers.

    >>> m, y1 = normalize_pair(reduce(1, 3), reduce(2, 5))
    >>> str(m.apply(reduce(1, 3))), str(y1)
    ('1/0', '0/1')
    """
    if x == y:
        raise DomainError("normalize_pair requires distinct slopes")
    if x.is_infinity:
        m = MobiusMap.identity()
    else:
        g, u, v = _xgcd(x.p, x.q)
        # g = 1 because x is canonical; rows (u, v) and (-q, p) are a basis.
        m = MobiusMap(u, v, -x.q, x.p)
    image = m.apply(y)
    if image.is_infinity:
        raise DomainError("normalize_pair image collapse; endpoints not distinct")
    k = image.floor()
    if k:
        m = MobiusMap.translation(-k).compose(m)
        image = ExtendedRational(image.p - k * image.q, image.q)
    return m, image
