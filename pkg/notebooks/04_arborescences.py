"""Roots, one spanning arborescence, and how many there are."""
from submanet import arborescence_roots, count_arborescences, extract_arborescence, fixture
from submanet.arborescence import matrix_tree_count
from submanet.errors import NoArborescence

for name in ("D1", "D3", "D5"):
    D = fixture(name).digraph
    roots = sorted(arborescence_roots(D))
    print(name, "roots:", roots)
    for r in roots:
        T = extract_arborescence(D, r)
        print("  tree:", [tuple(a) for a in T.arcs], "depth", T.depth())
        # enumeration and the determinant agree
        print("  count:", count_arborescences(D, r, method="enumerate"), matrix_tree_count(D, r))

try:
    extract_arborescence(fixture("D1").digraph, "v2")
except NoArborescence as exc:
    print("D1:", exc)
