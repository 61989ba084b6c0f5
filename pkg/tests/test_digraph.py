import pytest
from hypothesis import given

from strategies import digraphs
from submanet import build, classify, degree_profile, delete, induced_subdigraph, underlying_graph
from submanet.digraph import Arc, Digraph, DuplicateArcWarning, label_key
from submanet.errors import DanglingEndpoint, InvalidLabel, LoopArc, UnknownArc, UnknownVertex

D1_ARCS = [("v2", "v1"), ("v2", "v3"), ("v4", "v1"), ("v4", "v3")]


def test_build_d1():
    D = build(["v1", "v2", "v3", "v4"], D1_ARCS)
    assert D.order == 4
    assert D.size == 4
    assert D.vertices == ("v1", "v2", "v3", "v4")


def test_build_single_vertex():
    D = build(["v1"], [])
    assert D.order == 1 and D.size == 0


def test_build_rejects_loop():
    with pytest.raises(LoopArc):
        build(["v1"], [("v1", "v1")])


def test_build_dangling_endpoint():
    with pytest.raises(DanglingEndpoint):
        build(["a"], [("a", "b")])
    D = build(["a"], [("a", "b")], auto_declare=True)
    assert D.vertices == ("a", "b")


def test_build_duplicate_arc_warns_and_dedupes():
    with pytest.warns(DuplicateArcWarning):
        D = build(["a", "b"], [("a", "b"), ("a", "b")])
    assert D.size == 1


def test_duplicate_vertices_keep_first_position():
    D = build(["b", "a", "b"], [])
    assert D.vertices == ("b", "a")


@pytest.mark.parametrize("bad", ["", "a b", "x\ty", 3])
def test_invalid_labels(bad):
    with pytest.raises(InvalidLabel):
        build([bad], [])


def test_degree_profile_d1(D1):
    p = degree_profile(D1)
    assert p.in_degree["v2"] == 0 and p.in_degree["v4"] == 0
    assert p.in_neighbors["v1"] == {"v2", "v4"}
    assert p.in_neighbors["v3"] == {"v2", "v4"}
    assert p.sources() == {"v2", "v4"}
    assert p.sinks() == {"v1", "v3"}


def test_degree_profile_single_vertex():
    p = degree_profile(build(["v1"], []))
    assert p.in_degree["v1"] == 0 and p.out_degree["v1"] == 0


def test_neighborhood_of_set(D1):
    p = degree_profile(D1)
    assert p.neighborhood(["v1"]) == {"v2", "v4"}
    assert p.neighborhood(["v1", "v2"]) == {"v1", "v2", "v3", "v4"}
    assert p.degree("v2") == 2


def test_underlying_graph_d1(D1):
    U = underlying_graph(D1)
    assert U.size == 8
    assert classify(U).is_symmetric


def test_underlying_graph_trivial_cases():
    E = build(["a", "b"], [])
    assert underlying_graph(E) == E
    S = build(["a", "b"], [("a", "b"), ("b", "a")])
    assert underlying_graph(S).arc_set == S.arc_set


def test_induced_subdigraph(D1):
    S = induced_subdigraph(D1, {"v2", "v1"})
    assert S.arcs == (("v2", "v1"),)
    assert induced_subdigraph(D1, D1.vertices) == D1
    assert induced_subdigraph(D1, set()).order == 0
    with pytest.raises(UnknownVertex):
        induced_subdigraph(D1, {"zz"})


def test_delete_vertex_and_arc(D1):
    R = delete(D1, {"v2"})
    assert R.order == 3
    assert set(R.arcs) == {("v4", "v1"), ("v4", "v3")}
    assert delete(D1, []) == D1
    R2 = delete(D1, [("v2", "v1")])
    assert R2.order == 4 and R2.size == 3
    with pytest.raises(UnknownArc):
        delete(D1, [("v1", "v2")])
    with pytest.raises(UnknownVertex):
        delete(D1, ["v9"])


def test_classify():
    D1 = build(["v1", "v2", "v3", "v4"], D1_ARCS)
    f = classify(D1)
    assert f.is_simple and f.is_oriented and not f.is_symmetric and not f.underlying_is_complete
    g = classify(underlying_graph(D1))
    assert g.is_symmetric and not g.is_oriented
    assert classify(build(["a", "b"], [("a", "b"), ("b", "a")])).underlying_is_complete


def test_label_key_natural_order():
    assert sorted(["v10", "v2", "v1"], key=label_key) == ["v1", "v2", "v10"]


def test_value_semantics():
    a = Digraph(["x", "y"], [("x", "y")])
    b = Digraph(["x", "y"], [Arc("x", "y")])
    assert a == b and hash(a) == hash(b)


@given(digraphs())
def test_degree_sums(D):
    p = degree_profile(D)
    assert sum(p.in_degree.values()) == sum(p.out_degree.values()) == D.size
    for v in D.vertices:
        assert p.in_degree[v] == len(p.in_neighbors[v])


@given(digraphs())
def test_underlying_idempotent(D):
    assert underlying_graph(underlying_graph(D)) == underlying_graph(D)


@given(digraphs())
def test_induced_matches_filter(D):
    keep = set(D.vertices[::2])
    S = induced_subdigraph(D, keep)
    assert set(S.arcs) == {(u, v) for u, v in D.arcs if u in keep and v in keep}


@given(digraphs())
def test_delete_then_readd(D):
    for a in D.arcs[:3]:
        R = delete(D, [a])
        back = Digraph(R.vertices, list(R.arcs) + [a])
        assert back.arc_set == D.arc_set and back.vertices == D.vertices
    if D.order:
        v = D.vertices[-1]
        R = delete(D, [v])
        incident = [a for a in D.arcs if v in a]
        back = Digraph(list(R.vertices) + [v], list(R.arcs) + incident)
        assert back.arc_set == D.arc_set and set(back.vertices) == set(D.vertices)


@given(digraphs())
def test_oriented_iff_no_two_cycle(D):
    two_cycle = any((v, u) in D.arc_set for u, v in D.arcs)
    assert classify(D).is_oriented == (not two_cycle)
