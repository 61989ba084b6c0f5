"""Full invariant analysis of one digraph, with JSON and text renderings."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from . import arborescence as arb
from . import connectivity as conn
from . import invariants as inv
from .certificates import (
    ARC,
    VERTEX,
    Arborescence,
    ColoringCertificate,
    DominatingSetCertificate,
    IndependentSetCertificate,
    IntegrityCertificate,
    MatchingCertificate,
    check_certificate,
)
from .digraph import Arc, Digraph, classify, label_key, sorted_labels
from .errors import CertificateError, GraphError
from .submanifolds import derivation_report

__all__ = ["AnalysisReport", "analyze", "load_report", "format_text", "SCHEMA_KEYS"]

SCHEMA_KEYS = ("graph", "structure", "connectivity", "invariants", "certificates", "derivation")


def _labels(vs) -> list:
    return sorted_labels(vs)


def _arcs(arcs) -> list:
    return [[t, h] for t, h in sorted(arcs, key=lambda a: (label_key(a[0]), label_key(a[1])))]


@dataclass
class AnalysisReport:
    """Everything :func:`analyze` computes, plus the graph it was computed on."""

    digraph: Digraph
    structure: dict
    connectivity: dict
    matching: MatchingCertificate
    independent_set: IndependentSetCertificate
    coloring: ColoringCertificate
    dominating_set: DominatingSetCertificate
    vertex_integrity: IntegrityCertificate
    arc_integrity: IntegrityCertificate
    arborescence_roots: list
    arborescence_counts: dict
    arborescence: Arborescence | None
    derivation: dict

    def certificates(self) -> list:
        out = [
            self.matching,
            self.independent_set,
            self.coloring,
            self.dominating_set,
            self.vertex_integrity,
            self.arc_integrity,
        ]
        if self.arborescence is not None:
            out.append(self.arborescence)
        return out

    def validate(self) -> None:
        for cert in self.certificates():
            check_certificate(self.digraph, cert)

    @property
    def invariants(self) -> dict:
        return {
            "matching_size": self.matching.size,
            "perfect_matching": self.matching.is_perfect,
            "independence_number": self.independent_set.size,
            "chromatic_number": self.coloring.colors,
            "domination_number": self.dominating_set.size,
            "vertex_integrity": self.vertex_integrity.value,
            "arc_integrity": self.arc_integrity.value,
        }

    def to_json(self) -> dict:
        D = self.digraph
        return {
            "graph": {
                "order": len(D),
                "size": D.size,
                "vertices": list(D.vertices),
                "arcs": [[t, h] for t, h in D.arcs],
            },
            "structure": self.structure,
            "connectivity": self.connectivity,
            "invariants": self.invariants,
            "certificates": {
                "matching": {"arcs": _arcs(self.matching.arcs), "is_perfect": self.matching.is_perfect},
                "independent_set": _labels(self.independent_set.vertices),
                "coloring": [_labels(c) for c in self.coloring.classes],
                "dominating_set": _labels(self.dominating_set.vertices),
                "vertex_integrity": _integrity_json(self.vertex_integrity),
                "arc_integrity": _integrity_json(self.arc_integrity),
                "arborescence": {
                    "roots": _labels(self.arborescence_roots),
                    "counts": {r: self.arborescence_counts[r] for r in _labels(self.arborescence_counts)},
                    "example": None
                    if self.arborescence is None
                    else {"root": self.arborescence.root, "arcs": _arcs(self.arborescence.arcs)},
                },
            },
            "derivation": self.derivation,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False) + "\n"


def _integrity_json(c: IntegrityCertificate) -> dict:
    removal = _labels(c.removal_set) if c.kind == VERTEX else _arcs(c.removal_set)
    return {"removal_set": removal, "strong_component_max": c.strong_component_max, "value": c.value}


def _connectivity(D: Digraph) -> dict:
    part = conn.strong_components(D)
    cycle = conn.find_cycle(D)
    out: dict[str, Any] = {
        "class": conn.connectivity_class(D).value if len(D) else None,
        "strong_components": sorted((_labels(c) for c in part.components), key=lambda c: label_key(c[0])),
        "topological_order": None if cycle else conn.topological_sort(D, highest_first=True),
        "cycle": cycle,
    }
    try:
        lp = conn.longest_path(D)
        out["longest_path"] = {"length": lp.length, "vertices": list(lp.vertices)}
    except GraphError as exc:
        out["longest_path"] = {"length": None, "vertices": None, "error": str(exc)}
    out["closure_additions"] = _arcs(conn.closure_additions(D))
    try:
        ecc = conn.eccentricity_report(D)
        out["eccentricity"] = {
            "convention": ecc.convention,
            "values": {v: ecc.eccentricity[v] for v in _labels(ecc.eccentricity)},
            "radius": ecc.radius,
            "diameter": ecc.diameter,
            "center": _labels(ecc.center),
            "periphery": _labels(ecc.periphery),
        }
    except GraphError:
        out["eccentricity"] = None
    return out


def analyze(D: Digraph) -> AnalysisReport:
    """Run every invariant on ``D`` and collect the certificates."""
    flags = classify(D).as_dict()
    flags["acyclic"] = conn.is_acyclic(D)
    roots = arb.arborescence_roots(D)
    counts = {r: arb.count_arborescences(D, r) for r in roots}
    first = min(roots, key=label_key) if roots else None
    tree = arb.extract_arborescence(D, first) if first is not None else None
    der = derivation_report(D)
    derivation = {
        "underivable": _labels(der.underivable),
        "non_generative": _labels(der.non_generative),
        "derivers": {v: _labels(der.derivers[v]) for v in D.vertices},
        "derivable_from": {v: _labels(der.derivable_from[v]) for v in D.vertices},
        "derives": {v: _labels(der.derives[v]) for v in D.vertices},
    }
    report = AnalysisReport(
        digraph=D,
        structure=flags,
        connectivity=_connectivity(D),
        matching=inv.maximum_matching(D),
        independent_set=inv.max_independent_set(D),
        coloring=inv.chromatic_partition(D),
        dominating_set=inv.min_dominating_set(D),
        vertex_integrity=inv.vertex_integrity(D),
        arc_integrity=inv.arc_integrity(D),
        arborescence_roots=_labels(roots),
        arborescence_counts=counts,
        arborescence=tree,
        derivation=derivation,
    )
    report.validate()
    return report


def load_report(data: dict | str) -> AnalysisReport:
    """Rebuild a report from its JSON form and re-validate every certificate."""
    if isinstance(data, str):
        data = json.loads(data)
    missing = [k for k in SCHEMA_KEYS if k not in data]
    if missing:
        raise CertificateError(f"report lacks keys {missing}")
    g = data["graph"]
    D = Digraph(g["vertices"], [tuple(a) for a in g["arcs"]])
    c = data["certificates"]
    n = data["invariants"]
    a = c["arborescence"]
    tree = None
    if a["example"] is not None:
        tree = Arborescence(a["example"]["root"], {h: t for t, h in a["example"]["arcs"]})
    report = AnalysisReport(
        digraph=D,
        structure=data["structure"],
        connectivity=data["connectivity"],
        matching=MatchingCertificate(
            tuple(Arc(*x) for x in c["matching"]["arcs"]), True, c["matching"]["is_perfect"]
        ),
        independent_set=IndependentSetCertificate(tuple(c["independent_set"])),
        coloring=ColoringCertificate(tuple(tuple(x) for x in c["coloring"])),
        dominating_set=DominatingSetCertificate(tuple(c["dominating_set"])),
        vertex_integrity=_integrity_from(VERTEX, c["vertex_integrity"]),
        arc_integrity=_integrity_from(ARC, c["arc_integrity"]),
        arborescence_roots=list(a["roots"]),
        arborescence_counts=dict(a["counts"]),
        arborescence=tree,
        derivation=data["derivation"],
    )
    report.validate()
    if report.invariants != n:
        raise CertificateError("invariant values disagree with certificates")
    return report


def _integrity_from(kind: str, d: dict) -> IntegrityCertificate:
    removal = tuple(d["removal_set"]) if kind == VERTEX else tuple(Arc(*x) for x in d["removal_set"])
    return IntegrityCertificate(kind, removal, d["strong_component_max"], d["value"])


def format_text(report: AnalysisReport) -> str:
    """Aligned human-readable summary."""
    j = report.to_json()
    c = j["connectivity"]
    ecc = c["eccentricity"]
    lp = c["longest_path"]
    cert = j["certificates"]
    inv_ = j["invariants"]

    def fmt_set(xs):
        return "{" + ", ".join(xs) + "}"

    def fmt_arcs(xs):
        return "{" + ", ".join(f"({t},{h})" for t, h in xs) + "}"

    rows = [
        ("vertices", str(j["graph"]["order"])),
        ("arcs", str(j["graph"]["size"])),
        ("structure", ", ".join(k for k, v in j["structure"].items() if v) or "-"),
        ("connectivity", str(c["class"])),
        ("strong components", str(len(c["strong_components"]))),
        ("topological order", " ".join(c["topological_order"]) if c["topological_order"] else "cycle " + " ".join(c["cycle"] or [])),
        ("longest path", "-" if lp["length"] is None else f"{lp['length']}  ({' '.join(lp['vertices'])})"),
        ("closure adds", fmt_arcs(c["closure_additions"])),
    ]
    if ecc:
        rows += [
            ("radius", str(ecc["radius"])),
            ("diameter", str(ecc["diameter"])),
            ("center", fmt_set(ecc["center"])),
            ("periphery", fmt_set(ecc["periphery"])),
        ]
    rows += [
        ("matching", f"{inv_['matching_size']}{' (perfect)' if inv_['perfect_matching'] else ''}  {fmt_arcs(cert['matching']['arcs'])}"),
        ("independence", f"{inv_['independence_number']}  {fmt_set(cert['independent_set'])}"),
        ("chromatic", f"{inv_['chromatic_number']}  " + " ".join(fmt_set(x) for x in cert["coloring"])),
        ("domination", f"{inv_['domination_number']}  {fmt_set(cert['dominating_set'])}"),
        ("vertex integrity", f"{inv_['vertex_integrity']}  F={fmt_set(cert['vertex_integrity']['removal_set'])}"),
        ("arc integrity", f"{inv_['arc_integrity']}  F={fmt_arcs(cert['arc_integrity']['removal_set'])}"),
        ("arborescence roots", fmt_set(cert["arborescence"]["roots"]) if cert["arborescence"]["roots"] else "none"),
    ]
    for r, k in cert["arborescence"]["counts"].items():
        rows.append((f"  trees at {r}", str(k)))
    if cert["arborescence"]["example"]:
        rows.append(("  example", fmt_arcs(cert["arborescence"]["example"]["arcs"])))
    d = j["derivation"]
    rows += [
        ("underivable", fmt_set(d["underivable"])),
        ("non-generative", fmt_set(d["non_generative"])),
    ]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows) + "\n"
