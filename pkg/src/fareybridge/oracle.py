"""Brute-force cross-check: BFS in a bounded piece of the Farey graph.

Deliberately independent of the ladder machinery: vertices are all
canonical slopes with |p| <= N and q <= N, neighbors are generated
directly from the determinant condition (solutions of p*s - q*r = +-1
form two arithmetic families), and distances/geodesics come from plain
BFS.  Distances in the bounded graph can only overshoot the true ones,
and they stop changing once N is large enough to contain every vertex a
shortest path needs, which is what stabilized_distance waits for.

BFS results are memoized per (bound, source); the cached values are what
a fresh run would return.
"""

from __future__ import annotations

from collections import OrderedDict, deque
from dataclasses import dataclass, field

from .errors import DomainError, EnumerationOverflow, OracleBudget, OutOfBound
from .farey import DEFAULT_GEO_CAP, GEO_CAP_ENV, FareyPath, GeodesicSet, _resolve_cap
from .rationals import ExtendedRational

__all__ = [
    "UNREACHABLE",
    "BoundedSubgraph",
    "subgraph",
    "bounded_distance",
    "stabilized_distance",
    "bruteforce_geodesics",
    "DEFAULT_ORACLE_BUDGET",
]

DEFAULT_ORACLE_BUDGET = 8192  # largest bound stabilized_distance may visit


class _Unreachable:
    """Sentinel for 'no path inside this bound'."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unreachable"


UNREACHABLE = _Unreachable()


def _ceil_div(a: int, b: int) -> int:
    # b > 0
    return -((-a) // b)


def _t_range(x0: int, step: int, lo: int, hi: int) -> tuple[int, int]:
    """Integers t with lo <= x0 + t*step <= hi; step != 0."""
    if step > 0:
        return _ceil_div(lo - x0, step), (hi - x0) // step
    s = -step
    return _ceil_div(x0 - hi, s), (x0 - lo) // s


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_u, u = u, old_u - qt * u
        old_v, v = v, old_v - qt * v
    return old_r, old_u, old_v


@dataclass
class BoundedSubgraph:
    """Induced subgraph on slopes with |p| <= bound and q <= bound.

    Adjacency is generated on the fly from the determinant condition —
    nothing per-vertex is stored, so large bounds cost time, not memory.
    Only whole BFS results are cached (per source).
    """

    bound: int
    _dist_maps: dict = field(default_factory=dict, repr=False)
    _pred_maps: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.bound < 1:
            raise DomainError(f"bound must be >= 1, got {self.bound}")

    def contains(self, v: ExtendedRational) -> bool:
        return abs(v.p) <= self.bound and v.q <= self.bound

    def _adjacent(self, p: int, q: int):
        """Yield each in-bound (r, s) with |p*s - q*r| = 1 exactly once.

        The solutions of p*s - q*r = 1 are (-v + t*p, u + t*q) for
        u*p + v*q = 1, and likewise (v + t*p, -u + t*q) for -1; sign
        canonicalization can fold one family onto the other, hence the
        dedup set.
        """
        n = self.bound
        _, u, v = _xgcd(p, q)
        seen: set[tuple[int, int]] = set()
        for r0, s0 in ((-v, u), (v, -u)):
            if p:
                t_lo, t_hi = _t_range(r0, p, -n, n)
                if q:
                    s_lo, s_hi = _t_range(s0, q, -n, n)
                    t_lo, t_hi = max(t_lo, s_lo), min(t_hi, s_hi)
            else:
                t_lo, t_hi = _t_range(s0, q, -n, n)
            for t in range(t_lo, t_hi + 1):
                r, s = r0 + t * p, s0 + t * q
                if s < 0 or (s == 0 and r < 0):
                    r, s = -r, -s
                if abs(r) <= n and s <= n and (r, s) not in seen:
                    seen.add((r, s))
                    yield r, s

    def neighbors(self, v: ExtendedRational) -> tuple[ExtendedRational, ...]:
        """All in-bound slopes adjacent to v, in slope order."""
        pq = _check_inside(self, v)
        return tuple(sorted(ExtendedRational(r, s) for r, s in self._adjacent(*pq)))

    def distances_from(self, src: tuple[int, int]) -> dict[tuple[int, int], int]:
        """BFS distance map over the whole bounded component of src."""
        cached = self._dist_maps.get(src)
        if cached is not None:
            return cached
        adjacent = self._adjacent
        dist = {src: 0}
        queue = deque((src,))
        while queue:
            u = queue.popleft()
            nd = dist[u] + 1
            for w in adjacent(*u):
                if w not in dist:
                    dist[w] = nd
                    queue.append(w)
        self._dist_maps[src] = dist
        return dist

    def predecessors_from(
        self, src: tuple[int, int]
    ) -> tuple[dict, dict]:
        """(dist, preds): preds[v] lists the BFS-layer parents of v."""
        cached = self._pred_maps.get(src)
        if cached is not None:
            return cached
        adjacent = self._adjacent
        dist = {src: 0}
        preds: dict[tuple[int, int], list] = {src: []}
        queue = deque((src,))
        while queue:
            u = queue.popleft()
            nd = dist[u] + 1
            for w in adjacent(*u):
                d = dist.get(w)
                if d is None:
                    dist[w] = nd
                    preds[w] = [u]
                    queue.append(w)
                elif d == nd:
                    preds[w].append(u)
        self._pred_maps[src] = (dist, preds)
        return dist, preds


_SUBGRAPHS: OrderedDict[int, BoundedSubgraph] = OrderedDict()
_SUBGRAPH_KEEP = 8


def subgraph(bound: int) -> BoundedSubgraph:
    """Shared BoundedSubgraph instances, a few most recent bounds kept."""
    sg = _SUBGRAPHS.get(bound)
    if sg is None:
        sg = BoundedSubgraph(bound)
        _SUBGRAPHS[bound] = sg
    _SUBGRAPHS.move_to_end(bound)
    while len(_SUBGRAPHS) > _SUBGRAPH_KEEP:
        _SUBGRAPHS.popitem(last=False)
    return sg


def _check_inside(sg: BoundedSubgraph, v: ExtendedRational) -> tuple[int, int]:
    if not sg.contains(v):
        raise OutOfBound(f"{v} lies outside the bound {sg.bound}")
    return (v.p, v.q)


def bounded_distance(
    x: ExtendedRational, y: ExtendedRational, bound: int
):
    """BFS distance within the bound, or UNREACHABLE.

    The bounded graph is connected in practice (the convergent path to 1/0
    stays inside any box containing its endpoint), so UNREACHABLE is
    defensive surface.
    """
    sg = subgraph(bound)
    xv = _check_inside(sg, x)
    yv = _check_inside(sg, y)
    if xv == yv:
        return 0
    d = sg.distances_from(xv).get(yv)
    return UNREACHABLE if d is None else d


def stabilized_distance(
    x: ExtendedRational,
    y: ExtendedRational,
    *,
    max_bound: int = DEFAULT_ORACLE_BUDGET,
):
    """bounded_distance at N = 4*max(|p|, q), doubling N until the value is
    unchanged across two consecutive doublings; returns the settled value.

    Bounded distances can only overshoot the true ones and are monotone in
    the bound, so agreement across doublings is the stopping signal.  Raises
    OracleBudget before computing at any bound above max_bound.
    """
    bound = 4 * max(1, abs(x.p), x.q, abs(y.p), y.q)
    values: list = []
    while True:
        if bound > max_bound:
            raise OracleBudget(
                f"stabilization would need bound {bound} > budget {max_bound}"
            )
        values.append(bounded_distance(x, y, bound))
        if (
            len(values) >= 3
            and values[-1] is not UNREACHABLE
            and values[-1] == values[-2] == values[-3]
        ):
            return values[-1]
        bound *= 2


def bruteforce_geodesics(
    x: ExtendedRational,
    y: ExtendedRational,
    bound: int,
    *,
    cap: int | None = None,
) -> GeodesicSet:
    """Every shortest x->y path within the bound, as a GeodesicSet.

    Enumeration is its own recursive walk over the BFS predecessor DAG so
    that no path-listing code is shared with the ladder side.
    """
    cap_value = _resolve_cap(cap, GEO_CAP_ENV, DEFAULT_GEO_CAP)
    sg = subgraph(bound)
    xv = _check_inside(sg, x)
    yv = _check_inside(sg, y)
    if xv == yv:
        return GeodesicSet(x, y, 0, (FareyPath((x,)),))
    dist, preds = sg.predecessors_from(xv)
    if yv not in dist:
        raise DomainError(f"{y} unreachable from {x} at bound {bound}")

    counts: dict[tuple[int, int], int] = {xv: 1}

    def count(v) -> int:
        c = counts.get(v)
        if c is None:
            c = sum(count(u) for u in preds[v])
            counts[v] = c
        return c

    total = count(yv)
    if total > cap_value:
        raise EnumerationOverflow(
            f"{total} geodesics for {x} -> {y} at bound {bound}, cap is {cap_value}"
        )

    slopes: dict[tuple[int, int], ExtendedRational] = {}

    def slope_of(v: tuple[int, int]) -> ExtendedRational:
        s = slopes.get(v)
        if s is None:
            s = ExtendedRational(*v)
            slopes[v] = s
        return s

    def walk(v):
        if v == xv:
            yield (v,)
            return
        for u in preds[v]:
            for tail in walk(u):
                yield tail + (v,)

    raw = sorted(walk(yv))
    paths = tuple(FareyPath(tuple(slope_of(v) for v in p)) for p in raw)
    return GeodesicSet(x, y, dist[yv], paths)
