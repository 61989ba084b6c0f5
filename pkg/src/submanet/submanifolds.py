"""Symbolic submanifold classes, their specialisation rules, and the D1-D6 networks.

A class is described by its distribution slots (invariant, anti-invariant or
slant with a free angle).  A specialisation rule kills a slot or pins a slant
angle to 0 or pi/2; normalising the resulting slots must give exactly the
target class.  No geometry is computed: angles are the two constants plus
free symbols.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .connectivity import transitive_closure
from .digraph import Digraph, build, degree_profile, sorted_labels
from .errors import UnknownFixture

__all__ = [
    "SlotKind",
    "Slot",
    "SubmanifoldClass",
    "Condition",
    "SpecializationRule",
    "NetworkFixture",
    "DerivationReport",
    "ZERO",
    "HALF_PI",
    "CLASS_LABELS",
    "LABEL_CLASSES",
    "FIXTURE_NAMES",
    "structure",
    "normalize",
    "apply_condition",
    "rule_base",
    "rule_holds",
    "fixture",
    "fixtures",
    "generate_network",
    "derivation_report",
]

ZERO = "0"
HALF_PI = "pi/2"


class SlotKind(str, enum.Enum):
    INVARIANT = "INVARIANT"
    ANTI_INVARIANT = "ANTI_INVARIANT"
    SLANT = "SLANT"


@dataclass(frozen=True)
class Slot:
    name: str
    kind: SlotKind
    angle: str | None = None

    def __str__(self):
        if self.kind is SlotKind.SLANT:
            return f"{self.name}:SLANT({self.angle})"
        return f"{self.name}:{self.kind.value}"


class SubmanifoldClass(str, enum.Enum):
    HOLOMORPHIC = "HOLOMORPHIC"
    CR = "CR"
    ANTI_INVARIANT = "ANTI_INVARIANT"
    SLANT = "SLANT"
    SEMI_SLANT = "SEMI_SLANT"
    HEMI_SLANT = "HEMI_SLANT"
    BI_SLANT = "BI_SLANT"

    @property
    def label(self) -> str:
        return CLASS_LABELS[self]

    @property
    def structure(self) -> tuple:
        return _STRUCTURES[self]


_INV, _ANTI, _SL = SlotKind.INVARIANT, SlotKind.ANTI_INVARIANT, SlotKind.SLANT
H = SubmanifoldClass

_STRUCTURES = {
    H.HOLOMORPHIC: (Slot("D", _INV),),
    H.ANTI_INVARIANT: (Slot("D_perp", _ANTI),),
    H.SLANT: (Slot("D_theta", _SL, "theta"),),
    H.CR: (Slot("D1", _INV), Slot("D2", _ANTI)),
    H.SEMI_SLANT: (Slot("D", _INV), Slot("D_theta", _SL, "theta")),
    H.HEMI_SLANT: (Slot("D_perp", _ANTI), Slot("D_theta", _SL, "theta")),
    H.BI_SLANT: (Slot("D_theta1", _SL, "theta1"), Slot("D_theta2", _SL, "theta2")),
}

CLASS_LABELS = {
    H.HOLOMORPHIC: "v1",
    H.CR: "v2",
    H.ANTI_INVARIANT: "v3",
    H.SLANT: "v4",
    H.SEMI_SLANT: "v5",
    H.HEMI_SLANT: "v6",
    H.BI_SLANT: "v7",
}
LABEL_CLASSES = {v: k for k, v in CLASS_LABELS.items()}


def structure(cls: SubmanifoldClass) -> tuple:
    return _STRUCTURES[cls]


@dataclass(frozen=True)
class Condition:
    """``DISTRIBUTION_ZERO`` of a slot, or ``ANGLE_EQUALS`` a constant."""

    kind: str
    slot: str
    angle: str | None = None

    def __str__(self):
        if self.kind == "DISTRIBUTION_ZERO":
            return f"{self.slot} = {{0}}"
        return f"angle({self.slot}) = {self.angle}"


def zero(slot: str) -> Condition:
    return Condition("DISTRIBUTION_ZERO", slot)


def angle(slot: str, value: str) -> Condition:
    if value not in (ZERO, HALF_PI):
        raise ValueError("slant angles can only be pinned to 0 or pi/2")
    return Condition("ANGLE_EQUALS", slot, value)


def apply_condition(slots: Iterable[Slot], conditions: Iterable[Condition]) -> tuple:
    slots = {s.name: s for s in slots}
    for c in conditions:
        if c.slot not in slots:
            raise KeyError(f"no slot {c.slot!r}")
        s = slots[c.slot]
        if c.kind == "DISTRIBUTION_ZERO":
            del slots[c.slot]
        elif c.kind == "ANGLE_EQUALS":
            if s.kind is not SlotKind.SLANT:
                raise ValueError(f"{c.slot} carries no slant angle")
            slots[c.slot] = Slot(s.name, SlotKind.SLANT, c.angle)
        else:
            raise ValueError(f"unknown condition {c.kind!r}")
    return tuple(slots.values())


def normalize(slots: Iterable[Slot]) -> tuple:
    """Canonical slot signature.

    SLANT(0) becomes INVARIANT and SLANT(pi/2) ANTI_INVARIANT; like
    non-slant slots merge, while slant slots with free angles stay distinct.
    """
    kinds = set()
    slants = 0
    for s in slots:
        if s.kind is SlotKind.SLANT and s.angle == ZERO:
            kinds.add(SlotKind.INVARIANT)
        elif s.kind is SlotKind.SLANT and s.angle == HALF_PI:
            kinds.add(SlotKind.ANTI_INVARIANT)
        elif s.kind is SlotKind.SLANT:
            slants += 1
        else:
            kinds.add(s.kind)
    order = [SlotKind.INVARIANT, SlotKind.ANTI_INVARIANT]
    return tuple(k for k in order if k in kinds) + (SlotKind.SLANT,) * slants


@dataclass(frozen=True)
class SpecializationRule:
    source: SubmanifoldClass
    condition: tuple
    target: SubmanifoldClass
    citation: str = ""

    def __str__(self):
        cond = " and ".join(str(c) for c in self.condition)
        return f"{self.source.value} --[{cond}]--> {self.target.value}"

    def result(self) -> tuple:
        return normalize(apply_condition(self.source.structure, self.condition))


def rule_holds(rule: SpecializationRule) -> bool:
    return rule.result() == normalize(rule.target.structure)


def _rule(src, conds, tgt, cite):
    return SpecializationRule(src, tuple(conds), tgt, cite)


def rule_base() -> list:
    """Every degeneration between the seven classes."""
    return [
        _rule(H.CR, [zero("D1")], H.ANTI_INVARIANT, "CR, invariant part vanishes"),
        _rule(H.CR, [zero("D2")], H.HOLOMORPHIC, "CR, anti-invariant part vanishes"),
        _rule(H.SLANT, [angle("D_theta", ZERO)], H.HOLOMORPHIC, "slant, theta = 0"),
        _rule(H.SLANT, [angle("D_theta", HALF_PI)], H.ANTI_INVARIANT, "slant, theta = pi/2"),
        _rule(H.SEMI_SLANT, [zero("D")], H.SLANT, "semi-slant, D = {0}"),
        _rule(H.SEMI_SLANT, [zero("D_theta")], H.HOLOMORPHIC, "semi-slant, D_theta = {0}"),
        _rule(H.SEMI_SLANT, [angle("D_theta", HALF_PI)], H.CR, "semi-slant, theta = pi/2"),
        _rule(H.SEMI_SLANT, [zero("D"), angle("D_theta", HALF_PI)], H.ANTI_INVARIANT,
              "semi-slant, D = {0} and theta = pi/2"),
        _rule(H.HEMI_SLANT, [zero("D_perp")], H.SLANT, "hemi-slant, D_perp = {0}"),
        _rule(H.HEMI_SLANT, [zero("D_theta")], H.ANTI_INVARIANT, "hemi-slant, D_theta = {0}"),
        _rule(H.HEMI_SLANT, [angle("D_theta", ZERO)], H.CR, "hemi-slant, theta = 0"),
        _rule(H.HEMI_SLANT, [zero("D_perp"), angle("D_theta", ZERO)], H.HOLOMORPHIC,
              "hemi-slant, D_perp = {0} and theta = 0"),
        _rule(H.BI_SLANT, [zero("D_theta2")], H.SLANT, "bi-slant, D_theta2 = {0}"),
        _rule(H.BI_SLANT, [zero("D_theta1")], H.SLANT, "bi-slant, D_theta1 = {0}"),
        _rule(H.BI_SLANT, [angle("D_theta1", ZERO), angle("D_theta2", ZERO)], H.HOLOMORPHIC,
              "bi-slant, theta1 = theta2 = 0"),
        _rule(H.BI_SLANT, [angle("D_theta1", HALF_PI), angle("D_theta2", HALF_PI)], H.ANTI_INVARIANT,
              "bi-slant, theta1 = theta2 = pi/2"),
        _rule(H.BI_SLANT, [angle("D_theta1", HALF_PI), angle("D_theta2", ZERO)], H.CR,
              "bi-slant, theta1 = pi/2 and theta2 = 0"),
        _rule(H.BI_SLANT, [angle("D_theta1", HALF_PI)], H.HEMI_SLANT, "bi-slant, theta1 = pi/2"),
        _rule(H.BI_SLANT, [angle("D_theta2", ZERO)], H.SEMI_SLANT, "bi-slant, theta2 = 0"),
    ]


# -- fixtures ---------------------------------------------------------------

@dataclass(frozen=True)
class NetworkFixture:
    name: str
    digraph: Digraph
    expected: Mapping = field(default_factory=dict)
    deviations: tuple = ()

    @property
    def classes(self) -> dict:
        return {v: LABEL_CLASSES[v] for v in self.digraph.vertices}


def _arcs(text: str) -> list:
    return re.findall(r"\((v\d),(v\d)\)", text.replace(" ", ""))


_BASE = "(v2,v1),(v2,v3),(v4,v1),(v4,v3)"
_SEMI = "(v5,v2),(v5,v3),(v5,v4)"
_HEMI = "(v6,v1),(v6,v2),(v6,v3)"
_BI = "(v7,v5),(v7,v6)"

_FIXTURE_DATA = {
    "D1": (["v1", "v2", "v3", "v4"], _arcs(_BASE)),
    "D2": (["v1", "v2", "v3", "v4", "v6"], _arcs(_BASE + _HEMI)),
    "D3": (["v1", "v2", "v3", "v4", "v5"], _arcs(_BASE + _SEMI)),
    "D4": (["v1", "v2", "v3", "v4", "v5", "v6"], _arcs(_BASE + _SEMI + _HEMI)),
    "D5": (["v1", "v2", "v3", "v4", "v5", "v6", "v7"], _arcs(_BASE + _SEMI + _HEMI + _BI)),
    "D6": (
        ["v1", "v2", "v3", "v4", "v5", "v6", "v7"],
        _arcs(_BASE + "(v5,v1)" + _SEMI + _HEMI + "(v6,v4)" + _BI),
    ),
}
FIXTURE_NAMES = tuple(_FIXTURE_DATA)


def _fixture_graph(name: str) -> Digraph:
    try:
        vs, arcs = _FIXTURE_DATA[name]
    except KeyError:
        raise UnknownFixture(name) from None
    return build(vs, arcs)


def fixture(name: str) -> NetworkFixture:
    """One of D1..D6 with the values stated for it and its known deviations."""
    from .claims import expected_values, known_deviations

    D = _fixture_graph(name)
    return NetworkFixture(name, D, expected_values(name), known_deviations(name))


def fixtures() -> list:
    return [fixture(n) for n in FIXTURE_NAMES]


def _parse_policy(policy: str):
    if policy == "DIRECT_RULES":
        return None
    m = re.fullmatch(r"FIXTURE\((\w+)\)|(D\d+)", policy)
    if not m:
        raise ValueError(f"unknown arc policy {policy!r}")
    return m.group(1) or m.group(2)


def generate_network(classes: Iterable | None = None, arc_policy: str = "DIRECT_RULES") -> Digraph:
    """Build a network over submanifold classes.

    ``arc_policy`` is ``"DIRECT_RULES"`` (an arc wherever a rule leads from one
    chosen class to another) or ``"FIXTURE(Dk)"`` (the stored arc list).
    """
    name = _parse_policy(arc_policy)
    if name is not None:
        return _fixture_graph(name)
    if classes is None:
        chosen = set(SubmanifoldClass)
    else:
        # accept enum members, their names, or vertex labels such as "v5"
        chosen = {LABEL_CLASSES[c] if c in LABEL_CLASSES else SubmanifoldClass(c) for c in classes}
    labels = sorted_labels(CLASS_LABELS[c] for c in chosen)
    arcs = []
    for r in rule_base():
        if r.source in chosen and r.target in chosen:
            arcs.append((r.source.label, r.target.label))
    return Digraph(labels, arcs)


@dataclass(frozen=True)
class DerivationReport:
    underivable: frozenset
    non_generative: frozenset
    derivers: Mapping
    derivable_from: Mapping
    derives: Mapping


def derivation_report(D: Digraph) -> DerivationReport:
    """Which classes nothing derives, which derive nothing, and who derives whom."""
    prof = degree_profile(D)
    tc = transitive_closure(D)
    return DerivationReport(
        underivable=frozenset(v for v in D.vertices if prof.in_degree[v] == 0),
        non_generative=frozenset(v for v in D.vertices if prof.out_degree[v] == 0),
        derivers={v: prof.in_neighbors[v] for v in D.vertices},
        derivable_from={v: frozenset(tc.in_neighbors(v)) for v in D.vertices},
        derives={v: frozenset(tc.out_neighbors(v)) for v in D.vertices},
    )
