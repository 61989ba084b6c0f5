"""Witness types for optimal invariant values, and their independent checkers.

The ``check_*`` functions share no code with the solvers in
:mod:`submanet.invariants` or :mod:`submanet.arborescence`; they rebuild
everything they need from the raw arc set.  Each raises
:class:`~submanet.errors.CertificateError` on the first violated property.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .digraph import Arc, Digraph, sorted_labels
from .errors import CertificateError

__all__ = [
    "MatchingCertificate",
    "IndependentSetCertificate",
    "ColoringCertificate",
    "DominatingSetCertificate",
    "IntegrityCertificate",
    "PartitionCheck",
    "Arborescence",
    "VERTEX",
    "ARC",
    "check_matching",
    "check_independent_set",
    "check_coloring",
    "check_dominating_set",
    "check_integrity",
    "check_arborescence",
    "check_certificate",
]

VERTEX = "VERTEX"
ARC = "ARC"


@dataclass(frozen=True)
class MatchingCertificate:
    arcs: tuple
    is_maximum: bool = True
    is_perfect: bool = False

    @property
    def size(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class IndependentSetCertificate:
    vertices: tuple

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ColoringCertificate:
    classes: tuple

    @property
    def colors(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class DominatingSetCertificate:
    vertices: tuple

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class IntegrityCertificate:
    kind: str
    removal_set: tuple
    strong_component_max: int
    value: int


@dataclass(frozen=True)
class PartitionCheck:
    parts: tuple
    is_p_partite: bool
    is_complete_p_partite: bool

    @property
    def p(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class Arborescence:
    root: str
    parent: Mapping[str, str] = field(default_factory=dict)

    @property
    def arcs(self) -> tuple:
        return tuple(Arc(p, v) for v, p in self.parent.items())

    @property
    def length(self) -> int:
        """Arc count."""
        return len(self.parent)

    def depth(self) -> int:
        best = 0
        for v in self.parent:
            d = 0
            while v != self.root:
                v = self.parent[v]
                d += 1
            best = max(best, d)
        return best


def _fail(msg):
    raise CertificateError(msg)


def _members(D: Digraph, vs: Iterable[str], what: str) -> list:
    vs = list(vs)
    known = set(D.vertices)
    for v in vs:
        if v not in known:
            _fail(f"{what}: {v!r} is not a vertex")
    if len(set(vs)) != len(vs):
        _fail(f"{what}: repeated vertex")
    return vs


def check_matching(D: Digraph, cert: MatchingCertificate) -> None:
    arcs = set(D.arcs)
    ends: set = set()
    for a in cert.arcs:
        t, h = a
        if (t, h) not in arcs:
            _fail(f"matching: {a} is not an arc")
        if t == h:
            _fail("matching: loop")
        if t in ends or h in ends:
            _fail(f"matching: {a} shares an end-vertex")
        ends.update((t, h))
    if cert.is_perfect and len(ends) != len(D.vertices):
        _fail("matching flagged perfect but leaves vertices uncovered")
    if 2 * len(cert.arcs) > len(D.vertices):
        _fail("matching larger than |V|/2")


def check_independent_set(D: Digraph, cert: IndependentSetCertificate) -> None:
    q = set(_members(D, cert.vertices, "independent set"))
    for t, h in D.arcs:
        if t in q and h in q:
            _fail(f"independent set contains both ends of ({t}, {h})")


def check_coloring(D: Digraph, cert: ColoringCertificate) -> None:
    seen: list = []
    for cls in cert.classes:
        if not cls:
            _fail("coloring: empty class")
        seen.extend(cls)
        check_independent_set(D, IndependentSetCertificate(tuple(cls)))
    if sorted(seen) != sorted(D.vertices):
        _fail("coloring classes do not partition the vertex set")


def check_dominating_set(D: Digraph, cert: DominatingSetCertificate) -> None:
    s = set(_members(D, cert.vertices, "dominating set"))
    hit = set(s)
    for t, h in D.arcs:
        if t in s:
            hit.add(h)
    missing = [v for v in D.vertices if v not in hit]
    if missing:
        _fail(f"dominating set misses {missing}")


def _max_strong_order(vertices, arcs) -> int:
    succ = {v: set() for v in vertices}
    for t, h in arcs:
        succ[t].add(h)
    reach = {}
    for v in vertices:
        seen = {v}
        todo = [v]
        while todo:
            for w in succ[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        reach[v] = seen
    best = 0
    for v in vertices:
        best = max(best, sum(1 for u in vertices if u in reach[v] and v in reach[u]))
    return best


def check_integrity(D: Digraph, cert: IntegrityCertificate) -> None:
    if cert.kind == VERTEX:
        f = set(_members(D, cert.removal_set, "vertex removal set"))
        vs = [v for v in D.vertices if v not in f]
        arcs = [(t, h) for t, h in D.arcs if t not in f and h not in f]
    elif cert.kind == ARC:
        f = {tuple(a) for a in cert.removal_set}
        if len(f) != len(cert.removal_set) or not f <= set(D.arcs):
            _fail("arc removal set is not a set of arcs of the graph")
        vs = list(D.vertices)
        arcs = [a for a in D.arcs if tuple(a) not in f]
    else:
        _fail(f"unknown integrity kind {cert.kind!r}")
    m = _max_strong_order(vs, arcs)
    if m != cert.strong_component_max:
        _fail(f"m(D-F) is {m}, certificate says {cert.strong_component_max}")
    if cert.value != len(f) + m:
        _fail("integrity value is not |F| + m(D-F)")


def check_arborescence(D: Digraph, cert: Arborescence) -> None:
    if cert.root not in D:
        _fail("arborescence root is not a vertex")
    if cert.root in cert.parent:
        _fail("root has a parent")
    if set(cert.parent) != set(D.vertices) - {cert.root}:
        _fail("arborescence does not span the vertex set")
    arcs = set(D.arcs)
    children: dict = {}
    for v, p in cert.parent.items():
        if (p, v) not in arcs:
            _fail(f"({p}, {v}) is not an arc")
        children.setdefault(p, []).append(v)
    # every vertex must be met exactly once walking down from the root
    met = {cert.root}
    todo = [cert.root]
    while todo:
        for w in children.get(todo.pop(), ()):
            if w in met:
                _fail(f"two root paths reach {w}")
            met.add(w)
            todo.append(w)
    if len(met) != len(D.vertices):
        _fail(f"unreachable from root: {sorted_labels(set(D.vertices) - met)}")


_CHECKERS = {
    MatchingCertificate: check_matching,
    IndependentSetCertificate: check_independent_set,
    ColoringCertificate: check_coloring,
    DominatingSetCertificate: check_dominating_set,
    IntegrityCertificate: check_integrity,
    Arborescence: check_arborescence,
}


def check_certificate(D: Digraph, cert) -> None:
    _CHECKERS[type(cert)](D, cert)
