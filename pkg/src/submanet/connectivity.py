"""Walks, reachability, distances, strong components and orderings."""
from __future__ import annotations

import enum
import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .digraph import Arc, Digraph, label_key, underlying_graph
from .errors import (
    ClosedWalkInput,
    CyclicGraph,
    NoCycleExtractable,
    NoEligibleVertex,
    NotAWalk,
    NotClosed,
    TooLargeForExhaustive,
)

__all__ = [
    "Walk",
    "UNREACHABLE",
    "DistanceMatrix",
    "EccentricityReport",
    "StrongComponentPartition",
    "Connectivity",
    "ACTIVE_SOURCE",
    "walk_to_path",
    "closed_walk_to_cycle",
    "transitive_closure",
    "closure_additions",
    "reachable_set",
    "reachability",
    "distance_matrix",
    "strong_components",
    "connectivity_class",
    "topological_sort",
    "is_topological_order",
    "find_cycle",
    "is_acyclic",
    "longest_path",
    "eccentricity_report",
    "EXHAUSTIVE_THRESHOLD",
]

EXHAUSTIVE_THRESHOLD = 12
ACTIVE_SOURCE = "ACTIVE_SOURCE"


class _Unreachable(enum.Enum):
    UNREACHABLE = "unreachable"

    def __repr__(self):
        return "UNREACHABLE"


UNREACHABLE = _Unreachable.UNREACHABLE


@dataclass(frozen=True)
class Walk:
    """A sequence ``x1 a1 x2 ... xk`` with ``a_i = (x_i, x_{i+1})``."""

    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise NotAWalk("a walk needs at least one vertex")

    @classmethod
    def of(cls, *vertices: str) -> "Walk":
        return cls(vertices)

    @property
    def arcs(self) -> tuple[Arc, ...]:
        vs = self.vertices
        return tuple(Arc(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> str:
        return self.vertices[0]

    @property
    def end(self) -> str:
        return self.vertices[-1]

    @property
    def is_closed(self) -> bool:
        return self.length > 0 and self.start == self.end

    def is_trail(self) -> bool:
        return len(set(self.arcs)) == self.length

    def is_path(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def is_cycle(self) -> bool:
        inner = self.vertices[:-1]
        return self.is_closed and self.length >= 2 and len(set(inner)) == len(inner)

    def is_walk_in(self, D: Digraph) -> bool:
        return all(v in D for v in self.vertices) and all(a in D.arc_set for a in self.arcs)


def _check_walk(D: Digraph, W: Walk):
    if not W.is_walk_in(D):
        raise NotAWalk(f"{' '.join(W.vertices)} is not a walk in the graph")


def walk_to_path(D: Digraph, W: Walk) -> Walk:
    """Shortcut repeated vertices out of an open walk.

    The result is an ``(x, y)``-path whose arcs are a subset of the walk's.
    """
    _check_walk(D, W)
    if W.is_closed:
        raise ClosedWalkInput("closed walk given; use closed_walk_to_cycle")
    out: list[str] = []
    pos: dict[str, int] = {}
    for v in W.vertices:
        if v in pos:
            cut = pos[v]
            for u in out[cut + 1:]:
                del pos[u]
            del out[cut + 1:]
        else:
            pos[v] = len(out)
            out.append(v)
    return Walk(out)


def closed_walk_to_cycle(D: Digraph, W: Walk) -> Walk:
    """Extract a cycle through the walk's base vertex using only walk arcs."""
    _check_walk(D, W)
    if not W.is_closed:
        if W.length == 0:
            raise NoCycleExtractable("a single-vertex walk contains no cycle")
        raise NotClosed("walk is open; use walk_to_path")
    x = W.start
    # first arc leaves x; the remainder is a (w1, x)-walk that never needs x inside
    rest = Walk(W.vertices[1:])
    if rest.start == x:
        raise NoCycleExtractable("walk uses a loop")
    tail = walk_to_path(D, rest)
    cycle = Walk((x,) + tail.vertices)
    if not cycle.is_cycle():
        raise NoCycleExtractable(f"no cycle through {x} found in walk")
    return cycle


def reachable_set(D: Digraph, u: str) -> set[str]:
    D.require(u)
    seen = {u}
    todo = [u]
    while todo:
        v = todo.pop()
        for w in D.out_neighbors(v):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def reachability(D: Digraph, u: str, v: str) -> bool:
    D.require(v)
    return v in reachable_set(D, u)


def transitive_closure(D: Digraph) -> Digraph:
    arcs = list(D.arcs)
    present = set(arcs)
    for u in D.vertices:
        reach = reachable_set(D, u)
        for v in D.vertices:
            if v != u and v in reach and (u, v) not in present:
                arcs.append(Arc(u, v))
                present.add((u, v))
    return Digraph(D.vertices, arcs)


def closure_additions(D: Digraph) -> list[Arc]:
    """Arcs the transitive closure adds to ``D``, in closure order."""
    return [a for a in transitive_closure(D).arcs if a not in D.arc_set]


class DistanceMatrix:
    """Directed hop distances; unreachable pairs map to :data:`UNREACHABLE`."""

    def __init__(self, D: Digraph):
        self.vertices = D.vertices
        self._dist: dict[str, dict[str, int]] = {}
        for s in D.vertices:
            dist = {s: 0}
            q = deque([s])
            while q:
                v = q.popleft()
                for w in D.out_neighbors(v):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        q.append(w)
            self._dist[s] = dist

    def __getitem__(self, pair):
        u, v = pair
        return self._dist[u].get(v, UNREACHABLE)

    def finite_from(self, u: str) -> dict[str, int]:
        return dict(self._dist[u])


def distance_matrix(D: Digraph) -> DistanceMatrix:
    return DistanceMatrix(D)


@dataclass(frozen=True)
class EccentricityReport:
    eccentricity: dict
    radius: int
    diameter: int
    center: frozenset
    periphery: frozenset
    convention: str = ACTIVE_SOURCE


def eccentricity_report(D: Digraph) -> EccentricityReport:
    """Eccentricities over vertices that reach at least one other vertex.

    Sinks and other vertices that reach nothing are left out, and ``e(v)`` is
    the largest finite distance from ``v``.
    """
    dm = DistanceMatrix(D)
    ecc = {}
    for v in D.vertices:
        far = [d for d in dm.finite_from(v).values() if d > 0]
        if far:
            ecc[v] = max(far)
    if not ecc:
        raise NoEligibleVertex("no vertex reaches another vertex")
    rad = min(ecc.values())
    diam = max(ecc.values())
    return EccentricityReport(
        eccentricity=ecc,
        radius=rad,
        diameter=diam,
        center=frozenset(v for v, e in ecc.items() if e == rad),
        periphery=frozenset(v for v, e in ecc.items() if e == diam),
    )


@dataclass(frozen=True)
class StrongComponentPartition:
    components: tuple
    condensation_order: tuple = field(default=())

    def component_of(self, v: str) -> frozenset:
        for c in self.components:
            if v in c:
                return c
        raise KeyError(v)

    @property
    def max_order(self) -> int:
        return max((len(c) for c in self.components), default=0)


def strong_components(D: Digraph) -> StrongComponentPartition:
    """Tarjan's algorithm, iterative.

    ``components`` follows vertex order of each component's first member;
    ``condensation_order`` lists component indices sources-first.
    """
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set = set()
    stack: list[str] = []
    found: list[frozenset] = []
    counter = 0
    for root in D.vertices:
        if root in index:
            continue
        work = [(root, iter(D.out_neighbors(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(D.out_neighbors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                found.append(frozenset(comp))
    # Tarjan emits sinks first
    topo = list(reversed(found))
    pos = {v: i for i, v in enumerate(D.vertices)}
    comps = sorted(found, key=lambda c: min(pos[v] for v in c))
    where = {c: i for i, c in enumerate(comps)}
    return StrongComponentPartition(tuple(comps), tuple(where[c] for c in topo))


class Connectivity(str, enum.Enum):
    STRONG = "STRONG"
    WEAKLY_CONNECTED = "WEAKLY_CONNECTED"
    DISCONNECTED = "DISCONNECTED"


def connectivity_class(D: Digraph) -> Connectivity:
    if len(strong_components(D).components) <= 1:
        return Connectivity.STRONG
    if len(reachable_set(underlying_graph(D), D.vertices[0])) == len(D):
        return Connectivity.WEAKLY_CONNECTED
    return Connectivity.DISCONNECTED


def find_cycle(D: Digraph) -> list[str] | None:
    """Return some directed cycle as a closed vertex list, or None."""
    colour = dict.fromkeys(D.vertices, 0)
    parent: dict[str, str] = {}
    for root in D.vertices:
        if colour[root]:
            continue
        colour[root] = 1
        work = [(root, iter(D.out_neighbors(root)))]
        while work:
            v, it = work[-1]
            for w in it:
                if colour[w] == 0:
                    colour[w] = 1
                    parent[w] = v
                    work.append((w, iter(D.out_neighbors(w))))
                    break
                if colour[w] == 1:
                    cyc = [v]
                    while cyc[-1] != w:
                        cyc.append(parent[cyc[-1]])
                    cyc.reverse()
                    return cyc + [w]
            else:
                colour[v] = 2
                work.pop()
    return None


def is_acyclic(D: Digraph) -> bool:
    return find_cycle(D) is None


def topological_sort(D: Digraph, highest_first: bool = False) -> list[str]:
    """Kahn's algorithm with a deterministic choice among ready vertices.

    By default the earliest inserted ready vertex goes first; with
    ``highest_first`` the ready vertex with the largest label does.
    """
    cycle = find_cycle(D)
    if cycle is not None:
        raise CyclicGraph(cycle)
    indeg = {v: D.in_degree(v) for v in D.vertices}
    if highest_first:
        ranked = sorted(D.vertices, key=label_key, reverse=True)
    else:
        ranked = list(D.vertices)
    keyf = {v: i for i, v in enumerate(ranked)}.__getitem__
    ready = [(keyf(v), v) for v in D.vertices if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        _, v = heapq.heappop(ready)
        order.append(v)
        for w in D.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, (keyf(w), w))
    return order


def is_topological_order(D: Digraph, order: Sequence[str]) -> bool:
    if sorted(order) != sorted(D.vertices) or len(set(order)) != len(order):
        return False
    pos = {v: i for i, v in enumerate(order)}
    return all(pos[a.tail] < pos[a.head] for a in D.arcs)


def longest_path(D: Digraph, threshold: int = EXHAUSTIVE_THRESHOLD) -> Walk:
    """A maximum-length path; exact DP on DAGs, exhaustive search otherwise."""
    if not len(D):
        raise ValueError("empty graph has no path")
    if is_acyclic(D):
        order = topological_sort(D)
        best_len = {v: 0 for v in D.vertices}
        nxt: dict[str, str | None] = {v: None for v in D.vertices}
        for v in reversed(order):
            for w in D.out_neighbors(v):
                if best_len[w] + 1 > best_len[v]:
                    best_len[v] = best_len[w] + 1
                    nxt[v] = w
        start = max(D.vertices, key=lambda v: best_len[v])  # first maximum in vertex order
        path = [start]
        while nxt[path[-1]] is not None:
            path.append(nxt[path[-1]])
        return Walk(path)
    if len(D) > threshold:
        raise TooLargeForExhaustive(f"cyclic graph with {len(D)} > {threshold} vertices")
    best: list[str] = [D.vertices[0]]

    def extend(path, seen):
        nonlocal best
        if len(path) > len(best):
            best = list(path)
        if len(best) == len(D):
            return
        for w in D.out_neighbors(path[-1]):
            if w not in seen:
                path.append(w)
                seen.add(w)
                extend(path, seen)
                seen.discard(w)
                path.pop()

    for s in D.vertices:
        extend([s], {s})
    return Walk(best)
