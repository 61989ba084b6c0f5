"""Exact matching, independence, colouring, domination and integrity."""
import random

from submanet import (
    arc_integrity,
    build,
    check_certificate,
    chromatic_partition,
    fixture,
    max_independent_set,
    maximum_matching,
    min_dominating_set,
    vertex_integrity,
)

D6 = fixture("D6").digraph
for cert in (
    maximum_matching(D6),
    max_independent_set(D6),
    chromatic_partition(D6),
    min_dominating_set(D6),
    vertex_integrity(D6),
    arc_integrity(D6),
):
    check_certificate(D6, cert)  # raises CertificateError if the witness is wrong
    print(cert)

# a random graph with a few cycles, so integrity has something to cut
rng = random.Random(3)
vs = [f"x{i}" for i in range(8)]
G = build(vs, [(u, v) for u in vs for v in vs if u != v and rng.random() < 0.3])
vi = vertex_integrity(G)
print("vertex integrity", vi.value, "remove", vi.removal_set, "largest strong part", vi.strong_component_max)
print("chromatic number", chromatic_partition(G).colors)
