"""The Farey graph: ladders of triangles, spines, distances, geodesics.

Vertices are canonical slopes, edges are pairs with |det| = 1.  For
non-adjacent endpoints the work happens inside the ladder: the strip of
Farey triangles between the endpoints.  A shortest path between the
endpoints of a ladder never benefits from leaving it, so BFS inside the
strip computes true graph distance and the full geodesic set.

Ladders are built arithmetically, never geometrically: normalize the pair
so the source is 1/0 and the target is p/q in (0, 1), expand p/q as
[a1, ..., an], and lay down n fans of triangles.  Fan i has a_i triangles
around its pivot (the (i-1)st convergent, counting 0/1 as the 0th); its
rim walks the intermediate mediants from the previous pivot to the next.
Run lengths of the L/R labels are then (a1, ..., an) by construction,
with the first run labelled L.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .errors import (
    DegenerateLadder,
    DomainError,
    EmptyLadder,
    EnumerationOverflow,
    LadderTooLarge,
    SpineUndefined,
)
from .rationals import (
    ZERO,
    ExtendedRational,
    cf_expand,
    det,
    is_adjacent,
    normalize_pair,
)

__all__ = [
    "FareyTriangle",
    "Ladder",
    "FareyPath",
    "GeodesicSet",
    "ladder",
    "ladder_type",
    "spine",
    "distance",
    "all_geodesics",
    "is_unique_geodesic",
    "DEFAULT_LADDER_CAP",
    "DEFAULT_GEO_CAP",
    "LADDER_CAP_ENV",
    "GEO_CAP_ENV",
]

DEFAULT_LADDER_CAP = 10**6  # ladder vertices
DEFAULT_GEO_CAP = 10**5  # enumerated geodesics
LADDER_CAP_ENV = "FAREY_LADDER_CAP"
GEO_CAP_ENV = "FAREY_GEO_CAP"


def _resolve_cap(explicit: int | None, env_name: str, default: int) -> int:
    if explicit is not None:
        if explicit < 1:
            raise DomainError(f"cap must be positive, got {explicit}")
        return explicit
    raw = os.environ.get(env_name)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise DomainError(f"{env_name} must be an integer, got {raw!r}") from None
        if value < 1:
            raise DomainError(f"{env_name} must be positive, got {value}")
        return value
    return default


def _sort_key(v: ExtendedRational) -> tuple[int, int]:
    return (v.p, v.q)


@dataclass(frozen=True, slots=True)
class FareyTriangle:
    """Three pairwise adjacent slopes plus the side label of its fan."""

    vertices: tuple[ExtendedRational, ExtendedRational, ExtendedRational]
    label: str

    def __post_init__(self):
        vs = self.vertices
        if len(vs) != 3 or len(set(vs)) != 3:
            raise DomainError("triangle needs three distinct vertices")
        for i in range(3):
            for j in range(i + 1, 3):
                if abs(det(vs[i], vs[j])) != 1:
                    raise DomainError(f"not a Farey triangle: {vs[i]}, {vs[j]}")
        if self.label not in ("L", "R"):
            raise DomainError(f"label must be L or R, got {self.label!r}")

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self.vertices) + "}:" + self.label


@dataclass(frozen=True, slots=True)
class FareyPath:
    """A simplicial path: consecutive vertices adjacent, no repeats."""

    vertices: tuple[ExtendedRational, ...]

    def __post_init__(self):
        vs = self.vertices
        if not vs:
            raise DomainError("path needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise DomainError("path repeats a vertex")
        for u, v in zip(vs, vs[1:]):
            if not is_adjacent(u, v):
                raise DomainError(f"not an edge: {u} -- {v}")

    @property
    def length(self) -> int:
        """Edge count."""
        return len(self.vertices) - 1

    def __iter__(self):
        return iter(self.vertices)

    def __str__(self) -> str:
        return " -> ".join(str(v) for v in self.vertices)


@dataclass(frozen=True, slots=True)
class Ladder:
    """Ordered triangle strip between two non-adjacent slopes.

    runs are the L/R run lengths (the type); pivots are the fan centers,
    one per run, in strip order.  Triangle i and triangle i+1 always share
    an edge; triangles further apart share at most one vertex.
    """

    x: ExtendedRational
    y: ExtendedRational
    triangles: tuple[FareyTriangle, ...]
    runs: tuple[int, ...]
    pivots: tuple[ExtendedRational, ...]

    def __post_init__(self):
        if len(self.pivots) != len(self.runs):
            raise DomainError("one pivot per run required")
        if sum(self.runs) != len(self.triangles):
            raise DomainError("run lengths must sum to the triangle count")

    @property
    def triangle_count(self) -> int:
        return len(self.triangles)

    def vertices(self) -> tuple[ExtendedRational, ...]:
        """All distinct vertices in first-appearance order."""
        seen: dict[ExtendedRational, None] = {}
        for t in self.triangles:
            for v in t.vertices:
                seen.setdefault(v)
        return tuple(seen)

    def edges(self) -> tuple[tuple[ExtendedRational, ExtendedRational], ...]:
        """All distinct edges, each as a sorted pair, in first-appearance order."""
        seen: dict[tuple, None] = {}
        for t in self.triangles:
            vs = t.vertices
            for a, b in ((vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2])):
                if _sort_key(b) < _sort_key(a):
                    a, b = b, a
                seen.setdefault((a, b))
        return tuple(seen)


@dataclass(frozen=True, slots=True)
class GeodesicSet:
    """Every shortest path between two slopes, in deterministic order."""

    source: ExtendedRational
    target: ExtendedRational
    length: int
    paths: tuple[FareyPath, ...]

    def __post_init__(self):
        if not self.paths:
            raise DomainError("a geodesic set is never empty")
        for p in self.paths:
            if p.vertices[0] != self.source or p.vertices[-1] != self.target:
                raise DomainError("path endpoints disagree with the set")
            if p.length != self.length:
                raise DomainError("path length disagrees with the set")
        if len(set(self.paths)) != len(self.paths):
            raise DomainError("duplicate geodesic")

    @property
    def unique(self) -> bool:
        return len(self.paths) == 1

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)


def ladder(
    x: ExtendedRational,
    y: ExtendedRational,
    *,
    vertex_cap: int | None = None,
) -> Ladder:
    """The triangle strip between non-adjacent x and y.

    Raises EmptyLadder for x = y, DegenerateLadder for adjacent endpoints,
    LadderTooLarge when the strip would exceed the vertex cap
    (FAREY_LADDER_CAP, default 10**6 vertices).
    """
    if x == y:
        raise EmptyLadder(f"no ladder between equal slopes {x}")
    if is_adjacent(x, y):
        raise DegenerateLadder(f"{x} and {y} are adjacent; the ladder is empty")
    cap = _resolve_cap(vertex_cap, LADDER_CAP_ENV, DEFAULT_LADDER_CAP)

    m, image = normalize_pair(x, y)
    # image = 0/1 would mean adjacency, excluded above; so image is in (0,1).
    cf = cf_expand(image)
    n_vertices = sum(cf.entries) + 2
    if n_vertices > cap:
        raise LadderTooLarge(
            f"ladder needs {n_vertices} vertices, cap is {cap}"
        )

    inv = m.inverse()
    back: dict[tuple[int, int], ExtendedRational] = {}

    def mapped(p: int, q: int) -> ExtendedRational:
        v = back.get((p, q))
        if v is None:
            v = inv.apply(ExtendedRational(p, q))
            back[(p, q)] = v
        return v

    triangles: list[FareyTriangle] = []
    pivots: list[ExtendedRational] = []
    # Convergent frame: c_{-1} = 1/0, c_0 = 0/1; fan i pivots around c_{i-1}
    # and its rim walks the mediants from c_{i-2} up to c_i.
    cp, cq = 1, 0
    dp, dq = 0, 1
    for i, a in enumerate(cf.entries):
        label = "L" if i % 2 == 0 else "R"
        pivot = mapped(dp, dq)
        pivots.append(pivot)
        sp, sq = cp, cq
        for j in range(1, a + 1):
            tp, tq = cp + j * dp, cq + j * dq
            vs = sorted(
                (pivot, mapped(sp, sq), mapped(tp, tq)), key=_sort_key
            )
            triangles.append(FareyTriangle(tuple(vs), label))
            sp, sq = tp, tq
        cp, cq, dp, dq = dp, dq, sp, sq

    return Ladder(x, y, tuple(triangles), cf.entries, tuple(pivots))


def ladder_type(l: Ladder) -> tuple[int, ...]:
    """Run lengths of the L/R labels, first run labelled L."""
    return l.runs


def spine(l: Ladder) -> FareyPath:
    """The path from x to y through every pivot in strip order.

    Defined only for ladders with at least 3 triangles (SpineUndefined
    otherwise; the sole 2-triangle shape is the type-(2) ladder).
    """
    if l.triangle_count < 3:
        raise SpineUndefined(
            f"spine needs >= 3 triangles, ladder has {l.triangle_count}"
        )
    return FareyPath((l.x,) + l.pivots + (l.y,))


def _adjacency(l: Ladder) -> dict[ExtendedRational, list[ExtendedRational]]:
    adj: dict[ExtendedRational, list[ExtendedRational]] = {}
    for a, b in l.edges():
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    return adj


def distance(
    x: ExtendedRational,
    y: ExtendedRational,
    *,
    vertex_cap: int | None = None,
) -> int:
    """Graph distance in the Farey graph.

    0 and 1 are answered directly; otherwise BFS inside the ladder, whose
    internal shortest paths realize the true distance.
    """
    if x == y:
        return 0
    if is_adjacent(x, y):
        return 1
    l = ladder(x, y, vertex_cap=vertex_cap)
    adj = _adjacency(l)
    dist = {x: 0}
    queue = deque((x,))
    while queue:
        u = queue.popleft()
        if u == y:
            return dist[u]
        nd = dist[u] + 1
        for v in adj[u]:
            if v not in dist:
                dist[v] = nd
                queue.append(v)
    raise DomainError(f"ladder disconnected between {x} and {y}; invariant broken")


def _geodesics_in_graph(
    adj: dict,
    source,
    target,
    cap: int,
    describe: str,
):
    """All shortest source->target paths in an adjacency dict.

    Returns (length, paths) with paths sorted by vertex key; raises
    EnumerationOverflow when the count exceeds cap before materializing.
    """
    dist = {source: 0}
    preds: dict = {source: ()}
    queue = deque((source,))
    while queue:
        u = queue.popleft()
        if u == target:
            break
        nd = dist[u] + 1
        for v in adj[u]:
            d = dist.get(v)
            if d is None:
                dist[v] = nd
                preds[v] = [u]
                queue.append(v)
            elif d == nd:
                preds[v].append(u)
    if target not in dist:
        raise DomainError(f"no path found for {describe}; invariant broken")

    counts = {source: 1}

    def count(v) -> int:
        c = counts.get(v)
        if c is None:
            c = sum(count(u) for u in preds[v])
            counts[v] = c
        return c

    total = count(target)
    if total > cap:
        raise EnumerationOverflow(
            f"{total} geodesics for {describe}, cap is {cap}"
        )

    paths: list[tuple] = []
    stack = [(target, (target,))]
    while stack:
        v, tail = stack.pop()
        if v == source:
            paths.append(tail)
            continue
        for u in preds[v]:
            stack.append((u, (u,) + tail))
    paths.sort(key=lambda path: tuple(_sort_key(v) for v in path))
    return dist[target], paths


def all_geodesics(
    x: ExtendedRational,
    y: ExtendedRational,
    *,
    cap: int | None = None,
    vertex_cap: int | None = None,
) -> GeodesicSet:
    """Every geodesic from x to y, sorted, capped at FAREY_GEO_CAP (10**5).

    x = y yields the single empty path (one vertex, zero edges).
    """
    cap_value = _resolve_cap(cap, GEO_CAP_ENV, DEFAULT_GEO_CAP)
    if x == y:
        return GeodesicSet(x, y, 0, (FareyPath((x,)),))
    if is_adjacent(x, y):
        return GeodesicSet(x, y, 1, (FareyPath((x, y)),))
    l = ladder(x, y, vertex_cap=vertex_cap)
    length, raw = _geodesics_in_graph(
        _adjacency(l), x, y, cap_value, f"{x} -> {y}"
    )
    return GeodesicSet(x, y, length, tuple(FareyPath(p) for p in raw))


def is_unique_geodesic(
    x: ExtendedRational,
    y: ExtendedRational,
    *,
    cap: int | None = None,
    vertex_cap: int | None = None,
) -> bool:
    """Whether exactly one geodesic joins x and y.

    Distance <= 1 is trivially unique.  When every CF entry of the
    normalized target is >= 3 the spine is the one geodesic, so
    enumeration is skipped; otherwise the geodesic set is enumerated.
    The shortcut and the enumeration agree wherever both apply (tested).
    """
    if x == y or is_adjacent(x, y):
        return True
    _, image = normalize_pair(x, y)
    cf = cf_expand(image)
    if all(a >= 3 for a in cf.entries):
        return True
    return all_geodesics(x, y, cap=cap, vertex_cap=vertex_cap).unique
