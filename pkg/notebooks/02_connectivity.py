"""Walks, reachability, closure, strong components, orders, distances."""
from submanet import (
    Walk,
    build,
    closed_walk_to_cycle,
    connectivity_class,
    eccentricity_report,
    fixture,
    longest_path,
    strong_components,
    topological_sort,
    transitive_closure,
    walk_to_path,
)
from submanet.connectivity import closure_additions

D = build(["a", "b", "c"], [("a", "b"), ("b", "a"), ("a", "c")])
W = Walk.of("a", "b", "a", "c")
print(W, "->", walk_to_path(D, W))  # detour erased
print(closed_walk_to_cycle(D, Walk.of("a", "b", "a")))
print([sorted(c) for c in strong_components(D).components], connectivity_class(D).value)

D5 = fixture("D5").digraph
print("closure adds:", closure_additions(D5))
print("closure size:", transitive_closure(D5).size)
print("topological order:", topological_sort(D5))
print("highest label first:", topological_sort(D5, highest_first=True))
print("longest path:", longest_path(D5))

r = eccentricity_report(D5)
print("radius", r.radius, "diameter", r.diameter)
print("center", sorted(r.center), "periphery", sorted(r.periphery))
