"""Stated values for the six submanifold networks and the reproduction harness.

Each :class:`Claim` pairs a stated value with a function computing the same
quantity from an :class:`~submanet.report.AnalysisReport`.  A claim whose id
is listed as a known deviation is reported ``KNOWN_DEVIATION`` when the two
disagree instead of ``MISMATCH``.
"""
from __future__ import annotations

import enum
import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import connectivity as conn
from .arborescence import count_arborescences
from .certificates import (
    Arborescence,
    ColoringCertificate,
    DominatingSetCertificate,
    IndependentSetCertificate,
    MatchingCertificate,
    check_certificate,
)
from .digraph import Digraph, label_key, sorted_labels
from .errors import CertificateError, UnknownFixture
from .invariants import check_partition

__all__ = [
    "Verdict",
    "Claim",
    "ClaimResult",
    "ReproductionResult",
    "expected_values",
    "known_deviations",
    "claims_for",
    "reproduce",
    "SELECTORS",
]

_NAMES = ("D1", "D2", "D3", "D4", "D5", "D6")
SELECTORS = _NAMES + ("ALL",)
_THEOREM = {name: f"Thm3.{i}" for i, name in enumerate(_NAMES, 1)}


class Verdict(str, enum.Enum):
    MATCH = "MATCH"
    KNOWN_DEVIATION = "KNOWN_DEVIATION"
    MISMATCH = "MISMATCH"


def _a(*pairs: str) -> list:
    return [[p[:2], p[2:]] for p in pairs]


_TREE_D3 = _a("v2v1", "v5v2", "v5v3", "v5v4")
_TREE_D5 = _a("v5v2", "v5v3", "v5v4", "v6v1", "v7v5", "v7v6")

# Values as stated for each network; sets are sorted label lists.
_EXPECTED: dict[str, dict[str, Any]] = {
    "D1": {
        "order": 4, "size": 4,
        "partition": [["v1", "v3"], ["v2", "v4"]], "complete": True,
        "matching": 2, "perfect": True, "matching_witness": _a("v2v1", "v4v3"),
        "independence": 2, "independent_witness": ["v2", "v4"],
        "chromatic": 2, "coloring_witness": [["v2", "v4"], ["v1", "v3"]],
        "roots": [],
        "domination": 2, "dominating_witness": ["v2", "v4"],
        "longest_path": 1, "unreachable": ["v2", "v4"],
        "topological_order": ["v4", "v2", "v3", "v1"],
        "radius": 1, "diameter": 1, "radius_path": ["v2", "v1"], "diameter_path": ["v2", "v1"],
        "center": [], "periphery": ["v2", "v4"],
        "closure_additions": [],
    },
    "D2": {
        "order": 5, "size": 7,
        "partition": [["v1", "v3"], ["v2"], ["v4", "v6"]],
        "matching": 2, "matching_witness": _a("v6v1", "v4v3"),
        "independence": 2, "independent_witness": ["v2", "v4"],
        "chromatic": 3, "coloring_witness": [["v1", "v3"], ["v2"], ["v4", "v6"]],
        "roots": [],
        "domination": 2, "dominating_witness": ["v4", "v6"],
        "longest_path": 2, "unreachable": ["v4", "v6"],
        "topological_order": ["v6", "v4", "v2", "v3", "v1"],
        "radius": 1, "diameter": 1, "radius_path": ["v2", "v1"], "diameter_path": ["v2", "v1"],
        "center": [], "periphery": ["v2", "v4", "v6"],
        "closure_additions": [],
    },
    "D3": {
        "order": 5, "size": 7,
        "partition": [["v1", "v3"], ["v2", "v4"], ["v5"]],
        "matching": 2, "matching_witness": _a("v2v1", "v4v3"),
        "independence": 2, "independent_witness": ["v2", "v4"],
        "chromatic": 3, "coloring_witness": [["v1", "v3"], ["v2", "v4"], ["v5"]],
        "roots": ["v5"], "tree_root": "v5", "tree_length": 4, "tree_arcs": _TREE_D3, "tree_count": 1,
        "domination": 2, "dominating_witness": ["v4", "v5"],
        "longest_path": 2, "unreachable": ["v5"],
        "topological_order": ["v5", "v4", "v2", "v3", "v1"],
        "radius": 1, "diameter": 2, "radius_path": ["v2", "v1"], "diameter_path": ["v5", "v2", "v1"],
        "center": ["v2", "v4"], "periphery": ["v5"],
        "closure_additions": _a("v5v1"),
    },
    "D4": {
        "order": 6, "size": 10,
        "partition": [["v1", "v3"], ["v2", "v4"], ["v5", "v6"]],
        "matching": 3, "perfect": True, "matching_witness": _a("v2v1", "v5v4", "v6v3"),
        "independence": 2, "independent_witness": ["v2", "v4"],
        "chromatic": 3, "coloring_witness": [["v1", "v3"], ["v2", "v4"], ["v5", "v6"]],
        "roots": [],
        "domination": 2, "dominating_witness": ["v5", "v6"],
        "longest_path": 2, "unreachable": ["v5", "v6"],
        "topological_order": ["v6", "v5", "v4", "v2", "v3", "v1"],
        "radius": 1, "diameter": 2, "radius_path": ["v2", "v1"], "diameter_path": ["v5", "v2", "v1"],
        "center": ["v2", "v4", "v6"], "periphery": ["v5"],
        "closure_additions": _a("v5v1"),
    },
    "D5": {
        "order": 7, "size": 12,
        "partition": [["v1", "v3"], ["v2", "v4", "v7"], ["v5", "v6"]],
        "matching": 3, "matching_witness": _a("v2v1", "v5v4", "v6v3"),
        "independence": 3, "independent_witness": ["v2", "v4", "v7"],
        "chromatic": 3, "coloring_witness": [["v1", "v3"], ["v2", "v4", "v7"], ["v5", "v6"]],
        "roots": ["v7"], "tree_root": "v7", "tree_length": 6, "tree_arcs": _TREE_D5, "tree_depth": 2,
        "domination": 3, "dominating_witness": ["v5", "v6", "v7"],
        "longest_path": 3, "unreachable": ["v7"],
        "topological_order": ["v7", "v6", "v5", "v4", "v2", "v3", "v1"],
        "radius": 1, "diameter": 2, "radius_path": ["v2", "v1"], "diameter_path": ["v5", "v2", "v1"],
        "center": ["v2", "v4", "v6"], "periphery": ["v5", "v7"],
        "closure_additions": _a("v5v1", "v7v1", "v7v2", "v7v3", "v7v4"),
    },
    "D6": {
        "order": 7, "size": 12,
        "partition": [["v1", "v3"], ["v2", "v4", "v7"], ["v5", "v6"]],
        "matching": 3, "matching_witness": _a("v2v1", "v5v4", "v6v3"),
        "independence": 3, "independent_witness": ["v2", "v4", "v7"],
        "chromatic": 3, "coloring_witness": [["v1", "v3"], ["v2", "v4", "v7"], ["v5", "v6"]],
        "roots": ["v7"], "tree_root": "v7", "tree_arcs": _TREE_D5,
        "domination": 2, "dominating_witness": ["v5", "v7"],
        "longest_path": 3, "unreachable": ["v7"],
        "topological_order": ["v7", "v6", "v5", "v4", "v2", "v3", "v1"],
        "radius": 1, "diameter": 2, "radius_path": ["v2", "v1"], "diameter_path": ["v7", "v5", "v1"],
        "center": ["v2", "v4", "v5", "v6"], "periphery": ["v7"],
        "closure_additions": _a("v7v1", "v7v2", "v7v3", "v7v4"),
    },
}

_DEVIATIONS = {
    "D1": {"D1.center": "rad = diam = 1, so the center equals the periphery {v2, v4}"},
    "D2": {"D2.center": "rad = diam = 1, so the center equals the periphery {v2, v4, v6}"},
    "D3": {"Thm3.3.v.unique": "6 spanning arborescences are rooted at v5 (v1 and v3 each have several parents)"},
    "D4": {"Thm3.4.ii.half_arcs": "|A(D4)|/2 = 5 but a matching covers at most 3 arcs; perfect read as covering all vertices"},
    "D5": {},
    "D6": {
        "D6.size": "the listed arc set has 14 arcs",
        "Cor3.8.vertex.strict": "every network has vertex-integrity 1; D6 attains the maximum only with equality",
        "Cor3.8.arc.strict": "every network has arc-integrity 1; D6 attains the maximum only with equality",
    },
}


def expected_values(name: str) -> dict:
    if name not in _EXPECTED:
        raise UnknownFixture(name)
    return json.loads(json.dumps(_EXPECTED[name]))


def known_deviations(name: str) -> tuple:
    if name not in _DEVIATIONS:
        raise UnknownFixture(name)
    return tuple(_DEVIATIONS[name])


@dataclass(frozen=True)
class Claim:
    id: str
    fixture: str
    statement: str
    stated: Any
    compute: Callable = field(repr=False, compare=False)


@dataclass(frozen=True)
class ClaimResult:
    id: str
    fixture: str
    statement: str
    stated: Any
    computed: Any
    verdict: Verdict
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "claim": self.id,
            "fixture": self.fixture,
            "statement": self.statement,
            "stated": self.stated,
            "computed": self.computed,
            "verdict": self.verdict.value,
            "note": self.note,
        }


@dataclass
class ReproductionResult:
    results: list
    elapsed: float = 0.0

    @property
    def mismatches(self) -> list:
        return [r for r in self.results if r.verdict is Verdict.MISMATCH]

    @property
    def deviations(self) -> list:
        return [r for r in self.results if r.verdict is Verdict.KNOWN_DEVIATION]

    @property
    def exit_code(self) -> int:
        return 1 if self.mismatches else 0

    def by_id(self, claim_id: str) -> ClaimResult:
        for r in self.results:
            if r.id == claim_id:
                return r
        raise KeyError(claim_id)

    def to_json(self) -> dict:
        counts = {v.value: sum(r.verdict is v for r in self.results) for v in Verdict}
        return {"summary": counts, "claims": [r.as_dict() for r in self.results]}

    def format_text(self) -> str:
        w_id = max((len(r.id) for r in self.results), default=5)
        lines = []
        for r in self.results:
            line = f"{r.verdict.value:<15} {r.id:<{w_id}}  {r.statement}"
            if r.verdict is not Verdict.MATCH:
                line += f"  [stated {_show(r.stated)}, computed {_show(r.computed)}]"
            lines.append(line)
        s = self.to_json()["summary"]
        lines.append(
            f"{len(self.results)} claims: {s['MATCH']} MATCH, "
            f"{s['KNOWN_DEVIATION']} KNOWN_DEVIATION, {s['MISMATCH']} MISMATCH"
        )
        return "\n".join(lines) + "\n"


def _show(x) -> str:
    return json.dumps(x, separators=(",", ":"))


def _valid(D: Digraph, cert) -> bool:
    try:
        check_certificate(D, cert)
    except CertificateError:
        return False
    return True


def _is_shortest_path(D: Digraph, path: list, length: int) -> bool:
    w = conn.Walk(path)
    if not w.is_walk_in(D) or not w.is_path() or w.length != length:
        return False
    return conn.DistanceMatrix(D)[path[0], path[-1]] == length


def claims_for(name: str) -> list:
    """Claim inventory for one network."""
    e = expected_values(name)
    thm = _THEOREM[name]
    out: list[Claim] = []

    def add(cid, statement, stated, compute):
        out.append(Claim(cid, name, statement, stated, compute))

    add(f"{name}.order", "number of vertices", e["order"], lambda r: len(r.digraph))
    add(f"{name}.size", "number of arcs", e["size"], lambda r: r.digraph.size)

    # i: partite structure of the exhibited partition
    parts = e["partition"]
    p_stated = {"p": len(parts), "p_partite": True}
    if e.get("complete"):
        p_stated["complete"] = True

    def partite(r, parts=parts, with_complete=e.get("complete")):
        chk = check_partition(r.digraph, parts)
        got = {"p": chk.p, "p_partite": chk.is_p_partite}
        if with_complete:
            got["complete"] = chk.is_complete_p_partite
        return got

    kind = "complete bipartite" if e.get("complete") else f"{len(parts)}-partite"
    add(f"{thm}.i", f"{kind} via {_show(parts)}", p_stated, partite)

    # ii: matching
    add(f"{thm}.ii", "maximum matching size", e["matching"], lambda r: r.matching.size)
    if "perfect" in e:
        add(f"{thm}.ii.perfect", "has a perfect matching", True, lambda r: r.matching.is_perfect)
        add(f"{thm}.ii.half_arcs", "a perfect matching has |A|/2 arcs", e["size"] // 2,
            lambda r: r.matching.size if r.matching.is_perfect else None)
    add(f"{thm}.ii.witness", f"stated matching {_show(e['matching_witness'])} is a maximum matching", True,
        lambda r, m=e["matching_witness"]: _valid(r.digraph, MatchingCertificate(tuple(map(tuple, m))))
        and len(m) == r.matching.size)

    # iii: independence
    add(f"{thm}.iii", "independence number", e["independence"], lambda r: r.independent_set.size)
    add(f"{thm}.iii.witness", f"{_show(e['independent_witness'])} is a maximum independent set", True,
        lambda r, q=e["independent_witness"]: _valid(r.digraph, IndependentSetCertificate(tuple(q)))
        and len(q) == r.independent_set.size)

    # iv: colouring
    add(f"{thm}.iv", "chromatic number", e["chromatic"], lambda r: r.coloring.colors)
    add(f"{thm}.iv.witness", f"{_show(e['coloring_witness'])} is a minimum colouring", True,
        lambda r, c=e["coloring_witness"]: _valid(r.digraph, ColoringCertificate(tuple(map(tuple, c))))
        and len(c) == r.coloring.colors)

    # v: directed spanning tree
    has_tree = bool(e["roots"])
    add(f"{thm}.v", "has a directed spanning tree", has_tree, lambda r: bool(r.arborescence_roots))
    add(f"{thm}.v.roots", "possible roots", e["roots"], lambda r: sorted_labels(r.arborescence_roots))
    if "tree_arcs" in e:
        root = e["tree_root"]

        def stated_tree(r, arcs=e["tree_arcs"], root=root):
            return _valid(r.digraph, Arborescence(root, {h: t for t, h in arcs}))

        add(f"{thm}.v.tree", f"{_show(e['tree_arcs'])} is a spanning tree rooted at {root}", True, stated_tree)
    if "tree_length" in e:
        add(f"{thm}.v.length", "spanning tree length (arcs)", e["tree_length"],
            lambda r: r.arborescence.length if r.arborescence else None)
    if "tree_count" in e:
        add(f"{thm}.v.unique", f"spanning trees rooted at {e['tree_root']}", e["tree_count"],
            lambda r, root=e["tree_root"]: count_arborescences(r.digraph, root))
    if "tree_depth" in e:
        add(f"{thm}.v.depth", f"every vertex within this many steps of {e['tree_root']}", e["tree_depth"],
            lambda r: r.arborescence.depth() if r.arborescence else None)

    # vi: domination
    add(f"{thm}.vi", "domination number", e["domination"], lambda r: r.dominating_set.size)
    add(f"{thm}.vi.witness", f"{_show(e['dominating_witness'])} is a minimum dominating set", True,
        lambda r, s=e["dominating_witness"]: _valid(r.digraph, DominatingSetCertificate(tuple(s)))
        and len(s) == r.dominating_set.size)

    # narrative values
    c = lambda r: r.connectivity  # noqa: E731
    ecc = lambda r: r.connectivity["eccentricity"] or {}  # noqa: E731
    add(f"{name}.longest_path", "longest path length", e["longest_path"], lambda r: c(r)["longest_path"]["length"])
    add(f"{name}.unreachable", "vertices no other vertex reaches", e["unreachable"],
        lambda r: r.derivation["underivable"])
    add(f"{name}.topological_order", f"{'-'.join(e['topological_order'])} is a topological order", True,
        lambda r, o=e["topological_order"]: conn.is_topological_order(r.digraph, o))
    add(f"{name}.closure_additions", "arcs added by the transitive closure", e["closure_additions"],
        lambda r: c(r)["closure_additions"])
    add(f"{name}.radius", "radius", e["radius"], lambda r: ecc(r).get("radius"))
    add(f"{name}.diameter", "diameter", e["diameter"], lambda r: ecc(r).get("diameter"))
    add(f"{name}.radius_path", f"{'->'.join(e['radius_path'])} realises the radius", True,
        lambda r, p=e["radius_path"]: _is_shortest_path(r.digraph, p, ecc(r).get("radius")))
    add(f"{name}.diameter_path", f"{'->'.join(e['diameter_path'])} realises the diameter", True,
        lambda r, p=e["diameter_path"]: _is_shortest_path(r.digraph, p, ecc(r).get("diameter")))
    add(f"{name}.center", "center vertices", e["center"], lambda r: ecc(r).get("center"))
    add(f"{name}.periphery", "peripheral vertices", e["periphery"], lambda r: ecc(r).get("periphery"))

    # structural properties shared by all six
    add(f"Thm3.7.i.{name}", "simple digraph", True, lambda r: r.structure["simple"])
    add(f"Thm3.7.ii.{name}", "acyclic", True, lambda r: r.structure["acyclic"])
    add(f"Thm3.7.iii.{name}", "weakly connected", conn.Connectivity.WEAKLY_CONNECTED.value,
        lambda r: c(r)["class"])

    out.extend(_corollary_claims(name))
    return out


def _in_nb(v):
    return lambda r: sorted_labels(r.digraph.in_neighbors(v))


def _out_nb(v):
    return lambda r: sorted_labels(r.digraph.out_neighbors(v))


def _zero_in(vs):
    return lambda r: all(r.digraph.in_degree(v) == 0 for v in vs)


def _reaches_all(v):
    return lambda r: sorted_labels(conn.reachable_set(r.digraph, v) - {v}) == sorted_labels(
        set(r.digraph.vertices) - {v})


def _corollary_claims(name: str) -> list:
    rows = {
        "D1": [
            ("Cor3.1.a", "in-degree of v2 and v4 is 0", True, _zero_in(["v2", "v4"])),
            ("Cor3.1.b.v1", "in-neighbours of v1", ["v2", "v4"], _in_nb("v1")),
            ("Cor3.1.b.v3", "in-neighbours of v3", ["v2", "v4"], _in_nb("v3")),
        ],
        "D2": [
            ("Cor3.2.a", "in-degree of v4 and v6 is 0", True, _zero_in(["v4", "v6"])),
            ("Cor3.2.b.v1", "in-neighbours of v1", ["v2", "v4", "v6"], _in_nb("v1")),
            ("Cor3.2.b.v3", "in-neighbours of v3", ["v2", "v4", "v6"], _in_nb("v3")),
        ],
        "D3": [
            ("Cor3.3.a", "in-neighbours of v5", [], _in_nb("v5")),
            ("Cor3.3.b", "v5 reaches every other vertex", True, _reaches_all("v5")),
        ],
        "D4": [
            ("Cor3.4.a", "in-degree of v5 and v6 is 0", True, _zero_in(["v5", "v6"])),
            ("Cor3.4.b.v1", "nothing is derived from v1 (out-neighbours)", [], _out_nb("v1")),
            ("Cor3.4.b.v3", "nothing is derived from v3 (out-neighbours)", [], _out_nb("v3")),
        ],
        "D5": [
            ("Cor3.5.a", "out-neighbours of v7", ["v5", "v6"], _out_nb("v7")),
            ("Cor3.5.b", "in-neighbours of v7", [], _in_nb("v7")),
            ("Cor3.5.c", "v7 reaches every other vertex", True, _reaches_all("v7")),
        ],
        "D6": [
            ("Cor3.6.a", "vertices of out-degree 0", ["v1", "v3"], lambda r: r.derivation["non_generative"]),
            ("Cor3.6.b", "v7 reaches every other vertex", True, _reaches_all("v7")),
        ],
    }
    out = [Claim(cid, name, st, p, f) for cid, st, p, f in rows[name]]
    if name == "D6":
        out.extend(_integrity_claims())
    return out


def _integrity_claims() -> list:
    from .invariants import arc_integrity, vertex_integrity
    from .submanifolds import generate_network

    def values(fn):
        return {n: fn(generate_network(arc_policy=f"FIXTURE({n})")).value for n in _NAMES}

    def attains_max(fn):
        vals = values(fn)
        return vals["D6"] == max(vals.values())

    def strict(fn):
        vals = values(fn)
        return all(vals["D6"] > v for n, v in vals.items() if n != "D6")

    def max_size(r):
        sizes = {n: generate_network(arc_policy=f"FIXTURE({n})").size for n in _NAMES}
        return sizes["D6"] == max(sizes.values())

    return [
        Claim("Cor3.8.vertex", "D6", "D6 attains the largest vertex-integrity", True,
              lambda r: attains_max(vertex_integrity)),
        Claim("Cor3.8.vertex.strict", "D6", "D6 has strictly the largest vertex-integrity", True,
              lambda r: strict(vertex_integrity)),
        Claim("Cor3.8.arc", "D6", "D6 attains the largest arc-integrity", True,
              lambda r: attains_max(arc_integrity)),
        Claim("Cor3.8.arc.strict", "D6", "D6 has strictly the largest arc-integrity", True,
              lambda r: strict(arc_integrity)),
        Claim("Cor3.8.size", "D6", "D6 has the most arcs", True, max_size),
    ]


def _judge(claim: Claim, report, deviations: dict) -> ClaimResult:
    computed = claim.compute(report)
    if computed == claim.stated:
        verdict, note = Verdict.MATCH, ""
    elif claim.id in deviations:
        verdict, note = Verdict.KNOWN_DEVIATION, deviations[claim.id]
    else:
        verdict, note = Verdict.MISMATCH, ""
    return ClaimResult(claim.id, claim.fixture, claim.statement, claim.stated, computed, verdict, note)


def reproduce(selector: str = "ALL") -> ReproductionResult:
    """Check every stated value for one network, or for all six."""
    from .report import analyze
    from .submanifolds import generate_network

    if selector not in SELECTORS:
        raise UnknownFixture(selector)
    names = _NAMES if selector == "ALL" else (selector,)
    start = time.perf_counter()
    results = []
    for name in names:
        report = analyze(generate_network(arc_policy=f"FIXTURE({name})"))
        for claim in claims_for(name):
            results.append(_judge(claim, report, _DEVIATIONS[name]))
    return ReproductionResult(results, time.perf_counter() - start)
