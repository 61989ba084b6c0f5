"""Immutable simple digraphs with degree and neighbourhood queries.

Vertices are label strings kept in insertion order; arcs are ``(tail, head)``
pairs.  Every operation returns a new :class:`Digraph`.
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .errors import DanglingEndpoint, InvalidLabel, LoopArc, UnknownArc, UnknownVertex

__all__ = [
    "Arc",
    "Digraph",
    "DegreeProfile",
    "StructureFlags",
    "DuplicateArcWarning",
    "build",
    "degree_profile",
    "underlying_graph",
    "induced_subdigraph",
    "delete",
    "delete_vertices",
    "delete_arcs",
    "classify",
    "label_key",
    "sorted_labels",
]

_DIGITS = re.compile(r"(\d+)")


def label_key(label: str):
    """Natural sort key, so that ``v2 < v10``."""
    return tuple(int(tok) if tok.isdigit() else tok for tok in _DIGITS.split(label))


def sorted_labels(labels: Iterable[str]) -> list[str]:
    return sorted(labels, key=label_key)


class DuplicateArcWarning(UserWarning):
    pass


class Arc(NamedTuple):
    tail: str
    head: str

    def reversed(self) -> "Arc":
        return Arc(self.head, self.tail)


def _check_label(label) -> str:
    if not isinstance(label, str) or not label or not label.isprintable() or any(c.isspace() for c in label):
        raise InvalidLabel(f"invalid vertex label {label!r}")
    return label


class Digraph:
    """A finite simple digraph with deterministic vertex and arc order.

    Use :func:`build` to construct one from untrusted input.
    """

    __slots__ = ("_vertices", "_arcs", "_arcset", "_out", "_in", "_index")

    def __init__(self, vertices: Iterable[str] = (), arcs: Iterable[tuple[str, str]] = ()):
        vs: dict[str, None] = {}
        for v in vertices:
            vs.setdefault(_check_label(v))
        self._vertices = tuple(vs)
        self._index = {v: i for i, v in enumerate(self._vertices)}
        out: dict[str, list[str]] = {v: [] for v in self._vertices}
        inn: dict[str, list[str]] = {v: [] for v in self._vertices}
        seen: dict[Arc, None] = {}
        for a in arcs:
            a = Arc(*a)
            if a.tail == a.head:
                raise LoopArc(a.tail)
            if a.tail not in self._index or a.head not in self._index:
                raise DanglingEndpoint(a)
            if a in seen:
                continue
            seen[a] = None
            out[a.tail].append(a.head)
            inn[a.head].append(a.tail)
        self._arcs = tuple(seen)
        self._arcset = frozenset(seen)
        self._out = {v: tuple(ns) for v, ns in out.items()}
        self._in = {v: tuple(ns) for v, ns in inn.items()}

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return self._arcs

    @property
    def arc_set(self) -> frozenset:
        return self._arcset

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._index

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and self._arcset == other._arcset

    def __hash__(self):
        return hash((self._vertices, self._arcset))

    def __repr__(self):
        return f"Digraph(|V|={len(self._vertices)}, |A|={len(self._arcs)})"

    @property
    def order(self) -> int:
        return len(self._vertices)

    @property
    def size(self) -> int:
        return len(self._arcs)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def require(self, v: str) -> str:
        if v not in self._index:
            raise UnknownVertex(v)
        return v

    def has_arc(self, tail: str, head: str) -> bool:
        return (tail, head) in self._arcset

    def adjacent(self, u: str, v: str) -> bool:
        """True if an arc joins ``u`` and ``v`` in either direction."""
        return (u, v) in self._arcset or (v, u) in self._arcset

    def out_neighbors(self, v: str) -> tuple[str, ...]:
        self.require(v)
        return self._out[v]

    def in_neighbors(self, v: str) -> tuple[str, ...]:
        self.require(v)
        return self._in[v]

    def out_degree(self, v: str) -> int:
        return len(self.out_neighbors(v))

    def in_degree(self, v: str) -> int:
        return len(self.in_neighbors(v))

    def neighbors(self, v: str) -> tuple[str, ...]:
        """Neighbours of ``v`` in the underlying graph, in vertex order."""
        near = set(self.out_neighbors(v)) | set(self._in[v])
        return tuple(u for u in self._vertices if u in near)

    def successors_map(self) -> Mapping[str, tuple[str, ...]]:
        return dict(self._out)

    def predecessors_map(self) -> Mapping[str, tuple[str, ...]]:
        return dict(self._in)


def build(vertices: Iterable[str], arcs: Iterable[tuple[str, str]], auto_declare: bool = False) -> Digraph:
    """Validate and build a digraph.

    Duplicate vertices are dropped silently; duplicate arcs are dropped with a
    :class:`DuplicateArcWarning`.  With ``auto_declare`` unseen arc endpoints
    are appended to the vertex list in order of appearance, otherwise they
    raise :class:`DanglingEndpoint`.
    """
    vs = dict.fromkeys(_check_label(v) for v in vertices)
    arc_list = []
    seen = set()
    for a in arcs:
        a = Arc(*a)
        _check_label(a.tail)
        _check_label(a.head)
        if a.tail == a.head:
            raise LoopArc(a.tail)
        for end in a:
            if end not in vs:
                if not auto_declare:
                    raise DanglingEndpoint(a)
                vs[end] = None
        if a in seen:
            warnings.warn(f"duplicate arc {a.tail}->{a.head} ignored", DuplicateArcWarning, stacklevel=2)
            continue
        seen.add(a)
        arc_list.append(a)
    return Digraph(vs, arc_list)


@dataclass(frozen=True)
class DegreeProfile:
    in_degree: Mapping[str, int]
    out_degree: Mapping[str, int]
    in_neighbors: Mapping[str, frozenset]
    out_neighbors: Mapping[str, frozenset]

    def neighborhood(self, vertices: Iterable[str]) -> frozenset:
        """Vertices adjacent (either direction) to at least one of ``vertices``."""
        out: set = set()
        for v in vertices:
            out |= self.in_neighbors[v] | self.out_neighbors[v]
        return frozenset(out)

    def degree(self, v: str) -> int:
        """Degree in the underlying graph."""
        return len(self.in_neighbors[v] | self.out_neighbors[v])

    def sources(self) -> frozenset:
        return frozenset(v for v, d in self.in_degree.items() if d == 0)

    def sinks(self) -> frozenset:
        return frozenset(v for v, d in self.out_degree.items() if d == 0)


def degree_profile(D: Digraph) -> DegreeProfile:
    ins = {v: frozenset(D.in_neighbors(v)) for v in D.vertices}
    outs = {v: frozenset(D.out_neighbors(v)) for v in D.vertices}
    return DegreeProfile(
        in_degree={v: len(s) for v, s in ins.items()},
        out_degree={v: len(s) for v, s in outs.items()},
        in_neighbors=ins,
        out_neighbors=outs,
    )


def underlying_graph(D: Digraph) -> Digraph:
    """Symmetric digraph standing in for the undirected underlying graph."""
    arcs = []
    for a in D.arcs:
        arcs.append(a)
        arcs.append(a.reversed())
    return Digraph(D.vertices, arcs)


def induced_subdigraph(D: Digraph, keep: Iterable[str]) -> Digraph:
    keep = set(keep)
    for v in keep:
        D.require(v)
    return Digraph(
        [v for v in D.vertices if v in keep],
        [a for a in D.arcs if a.tail in keep and a.head in keep],
    )


def delete_vertices(D: Digraph, removal: Iterable[str]) -> Digraph:
    removal = set(removal)
    for v in removal:
        D.require(v)
    return induced_subdigraph(D, [v for v in D.vertices if v not in removal])


def delete_arcs(D: Digraph, removal: Iterable[tuple[str, str]]) -> Digraph:
    removal = {Arc(*a) for a in removal}
    for a in removal:
        if a not in D.arc_set:
            raise UnknownArc(a)
    return Digraph(D.vertices, [a for a in D.arcs if a not in removal])


def delete(D: Digraph, removal: Iterable) -> Digraph:
    """``D - F`` for a set of vertices or a set of arcs.

    Elements that are 2-tuples are treated as arcs, strings as vertices;
    mixing both kinds is rejected.
    """
    removal = list(removal)
    if not removal:
        return D
    if all(isinstance(x, str) for x in removal):
        return delete_vertices(D, removal)
    if all(isinstance(x, tuple) and len(x) == 2 for x in removal):
        return delete_arcs(D, removal)
    raise TypeError("removal set must contain only vertices or only arcs")


@dataclass(frozen=True)
class StructureFlags:
    is_simple: bool
    is_symmetric: bool
    is_oriented: bool
    underlying_is_complete: bool

    def as_dict(self) -> dict:
        return {
            "simple": self.is_simple,
            "symmetric": self.is_symmetric,
            "oriented": self.is_oriented,
            "underlying_complete": self.underlying_is_complete,
        }


def classify(D: Digraph) -> StructureFlags:
    # loops and parallel arcs cannot be stored, so every Digraph is simple
    arcs = D.arc_set
    symmetric = all(a.reversed() in arcs for a in arcs)
    oriented = not any(a.reversed() in arcs for a in arcs)
    vs = D.vertices
    complete = all(D.adjacent(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))
    return StructureFlags(True, symmetric, oriented, complete)
