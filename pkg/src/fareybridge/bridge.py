"""2-bridge links S(q, p) and the distances of their bridge splittings.

S(q, p) is presented by two rational tangles of slopes 1/0 and p/q, so the
distance of its (0,2)-splitting is the Farey distance between those two
slopes.  Every (0,2)-splitting is keen (each side has exactly one essential
disk class, so only one pair can realize the distance), and it is strongly
keen exactly when the geodesic is unique.

For connected sums the (0,3)-splitting of the composite presentation has
distance 0 precisely when a summand is the 2-component trivial link
S(0, 1); otherwise the distance is 1 and the splitting is never keen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import farey
from .errors import DomainError
from .farey import GeodesicSet
from .rationals import INFINITY, ExtendedRational, cf_eval

__all__ = [
    "TwoBridgeLink",
    "CompositeLink",
    "SplittingReport",
    "components",
    "splitting_distance_02",
    "is_keen_02",
    "is_strongly_keen_02",
    "classify_02",
    "classify_03",
    "make_strongly_keen_example",
    "KEEN_02_NOTE",
]

# Recorded on every (0,2) report; the reason the splitting is always keen.
KEEN_02_NOTE = (
    "each side of a (0,2)-splitting carries exactly one essential disk class, "
    "so a single pair realizes the distance"
)

_NOT_KEEN_03_NOTE = (
    "more than one disjoint disk pair realizes distance one, "
    "so no (0,3)-splitting of distance one is keen"
)

_DISTANCE0_03_NOTE = (
    "a summand is the 2-component trivial link, so the disk sets already share "
    "a boundary curve; keenness is not determined by this model"
)


@dataclass(frozen=True, slots=True)
class TwoBridgeLink:
    """S(q, p) with 0 <= p <= q coprime; S(0, 1) and S(1, 0) are allowed.

    q = 1 encodes the trivial knot; q = 0 the 2-component trivial link;
    q >= 2 the genuine 2-bridge links.
    """

    q: int
    p: int

    def __post_init__(self):
        if self.q < 0:
            raise DomainError(f"q must be non-negative, got {self.q}")
        if self.q == 0:
            if self.p != 1:
                raise DomainError(f"S(0, p) requires p = 1, got p = {self.p}")
            return
        if not 0 <= self.p <= self.q:
            raise DomainError(f"need 0 <= p <= q, got S({self.q}, {self.p})")
        if math.gcd(self.p, self.q) != 1:
            raise DomainError(f"p, q must be coprime, got S({self.q}, {self.p})")

    @property
    def slope(self) -> ExtendedRational:
        """The tangle slope p/q; 1/0 for S(0, 1)."""
        return ExtendedRational(self.p, self.q) if self.q else INFINITY

    @property
    def is_trivial_knot(self) -> bool:
        return self.q == 1

    @property
    def is_trivial_2component(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        return f"S({self.q},{self.p})"


def components(link: TwoBridgeLink) -> int:
    """Number of components: 2 when q is even (including q = 0), else 1."""
    return 2 if link.q % 2 == 0 else 1


@dataclass(frozen=True, slots=True)
class CompositeLink:
    """A connected sum of one or two 2-bridge summands."""

    summands: tuple[TwoBridgeLink, ...]

    def __post_init__(self):
        if not 1 <= len(self.summands) <= 2:
            raise DomainError(
                f"composite needs 1 or 2 summands, got {len(self.summands)}"
            )

    def __str__(self) -> str:
        return "#".join(str(s) for s in self.summands)


@dataclass(frozen=True, slots=True)
class SplittingReport:
    """Outcome of classifying one bridge splitting.

    keen/strongly_keen are None when the in-scope results give no verdict
    (only the distance-0 composite case).  exact=False would mark a
    lower-bound distance; no current code path emits it.
    """

    subject: str
    splitting: str  # "02" or "03"
    distance: int
    case: str
    keen: bool | None
    strongly_keen: bool | None
    exact: bool = True
    note: str = ""
    geodesics: GeodesicSet | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.distance < 0:
            raise DomainError("distance must be non-negative")
        if self.strongly_keen and not self.keen:
            raise DomainError("strongly keen implies keen")
        if self.distance == 1 and self.keen is True and self.strongly_keen is not True:
            raise DomainError("a keen splitting of distance 1 is strongly keen")


def splitting_distance_02(
    link: TwoBridgeLink, *, vertex_cap: int | None = None
) -> int:
    """Distance of the (0,2)-splitting: Farey distance from 1/0 to p/q.

    S(1, 0) gives the unknot's value 1; S(0, 1) gives 0.
    """
    return farey.distance(INFINITY, link.slope, vertex_cap=vertex_cap)


def is_keen_02(link: TwoBridgeLink) -> bool:
    """Always true; see KEEN_02_NOTE for the reason."""
    return True


def is_strongly_keen_02(
    link: TwoBridgeLink, *, cap: int | None = None, vertex_cap: int | None = None
) -> bool:
    """True when exactly one geodesic realizes the splitting distance.

    Distance <= 1 forces uniqueness.
    """
    return farey.is_unique_geodesic(
        INFINITY, link.slope, cap=cap, vertex_cap=vertex_cap
    )


def classify_02(
    link: TwoBridgeLink,
    *,
    include_geodesics: bool = True,
    cap: int | None = None,
    vertex_cap: int | None = None,
) -> SplittingReport:
    """Full (0,2)-splitting report for one 2-bridge link."""
    gs = farey.all_geodesics(INFINITY, link.slope, cap=cap, vertex_cap=vertex_cap)
    return SplittingReport(
        subject=str(link),
        splitting="02",
        distance=gs.length,
        case="02",
        keen=True,
        strongly_keen=gs.unique,
        note=KEEN_02_NOTE,
        geodesics=gs if include_geodesics else None,
    )


def classify_03(composite: CompositeLink) -> SplittingReport:
    """Classify the (0,3)-splitting of a 1- or 2-summand composite.

    Distance 0 iff some summand is S(0, 1).  Otherwise distance 1 with
    case (i) trivial knot, (ii) one nontrivial summand, (iii) connected
    sum of two nontrivial summands; such splittings are never keen.
    """
    if any(s.is_trivial_2component for s in composite.summands):
        return SplittingReport(
            subject=str(composite),
            splitting="03",
            distance=0,
            case="0",
            keen=None,
            strongly_keen=None,
            note=_DISTANCE0_03_NOTE,
        )
    nontrivial = [s for s in composite.summands if not s.is_trivial_knot]
    case = ("i", "ii", "iii")[len(nontrivial)]
    return SplittingReport(
        subject=str(composite),
        splitting="03",
        distance=1,
        case=case,
        keen=False,
        strongly_keen=False,
        note=_NOT_KEEN_03_NOTE,
    )


def make_strongly_keen_example(
    n: int, entries: tuple[int, ...] | list[int] | None = None
) -> TwoBridgeLink:
    """A 2-bridge link whose (0,2)-splitting has distance n, n >= 2, and a
    unique geodesic: slope [a1, ..., a_{n-1}] with every entry >= 3.

    Default entries are all 3s: n = 2 gives S(3,1), n = 3 gives S(10,3).
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if entries is None:
        entries = (3,) * (n - 1)
    entries = tuple(entries)
    if len(entries) != n - 1:
        raise DomainError(f"need {n - 1} entries for distance {n}, got {len(entries)}")
    if any(a < 3 for a in entries):
        raise DomainError(f"entries must all be >= 3, got {list(entries)}")
    slope = cf_eval(entries)
    return TwoBridgeLink(q=slope.q, p=slope.p)
