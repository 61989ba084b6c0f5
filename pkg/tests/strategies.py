from hypothesis import strategies as st

from submanet import Digraph


@st.composite
def digraphs(draw, max_vertices=7, min_vertices=1):
    n = draw(st.integers(min_vertices, max_vertices))
    vs = [f"v{i}" for i in range(1, n + 1)]
    pairs = [(u, v) for u in vs for v in vs if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Digraph(vs, arcs)
