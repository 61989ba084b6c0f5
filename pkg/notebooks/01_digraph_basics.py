"""Building digraphs, degrees, underlying graphs, subdigraphs."""
from submanet import build, classify, degree_profile, delete, induced_subdigraph, underlying_graph

# four vertices, two sources feeding two sinks
D = build(["v1", "v2", "v3", "v4"], [("v2", "v1"), ("v2", "v3"), ("v4", "v1"), ("v4", "v3")])
print(D)

prof = degree_profile(D)
print("in-degrees:", prof.in_degree)
print("sources:", sorted(prof.sources()), "sinks:", sorted(prof.sinks()))
print("N(v1):", sorted(prof.neighborhood(["v1"])))

# every arc gets its reverse
U = underlying_graph(D)
print("underlying arcs:", U.size, classify(U).as_dict())

print(induced_subdigraph(D, {"v1", "v2"}).arcs)
print(delete(D, ["v2"]).arcs)          # vertex deletion
print(delete(D, [("v2", "v1")]).arcs)  # arc deletion
