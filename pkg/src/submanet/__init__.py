"""Exact digraph invariants with machine-checkable certificates, and the
submanifold specialisation networks D1-D6 built on top of them."""

from .arborescence import arborescence_roots, count_arborescences, extract_arborescence
from .certificates import check_certificate
from .claims import Verdict, reproduce
from .connectivity import (
    UNREACHABLE,
    Connectivity,
    Walk,
    closed_walk_to_cycle,
    connectivity_class,
    eccentricity_report,
    longest_path,
    reachability,
    strong_components,
    topological_sort,
    transitive_closure,
    walk_to_path,
)
from .digraph import (
    Arc,
    Digraph,
    build,
    classify,
    degree_profile,
    delete,
    induced_subdigraph,
    underlying_graph,
)
from .invariants import (
    arc_integrity,
    check_partition,
    chromatic_partition,
    max_independent_set,
    maximum_matching,
    min_dominating_set,
    vertex_integrity,
)
from .report import analyze, load_report
from .submanifolds import SubmanifoldClass, derivation_report, fixture, generate_network, rule_base
from .textformat import parse_graph, serialize_graph

__version__ = "0.1.0"
