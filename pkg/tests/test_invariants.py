import pytest
from hypothesis import given, settings

import oracles
from strategies import digraphs
from submanet import (
    build,
    check_certificate,
    check_partition,
    chromatic_partition,
    degree_profile,
    induced_subdigraph,
    max_independent_set,
    maximum_matching,
    min_dominating_set,
    vertex_integrity,
    arc_integrity,
)
from submanet.certificates import (
    ColoringCertificate,
    DominatingSetCertificate,
    IndependentSetCertificate,
    IntegrityCertificate,
    MatchingCertificate,
)
from submanet.digraph import Arc, delete_arcs
from submanet.errors import CertificateError, NotAPartition

# (matching, perfect, alpha, chi, gamma) per network
EXPECTED = {
    "D1": (2, True, 2, 2, 2),
    "D2": (2, False, 2, 3, 2),
    "D3": (2, False, 2, 3, 2),
    "D4": (3, True, 2, 3, 2),
    "D5": (3, False, 3, 3, 3),
    "D6": (3, False, 3, 3, 2),
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_fixture_values(fx, name):
    D = fx(name)
    mu, perfect, alpha, chi, gamma = EXPECTED[name]
    m = maximum_matching(D)
    assert m.size == mu and m.is_perfect is perfect
    assert max_independent_set(D).size == alpha
    assert chromatic_partition(D).colors == chi
    assert min_dominating_set(D).size == gamma
    for cert in (m, max_independent_set(D), chromatic_partition(D), min_dominating_set(D)):
        check_certificate(D, cert)


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_fixture_integrity_is_one(fx, name):
    D = fx(name)
    for cert in (vertex_integrity(D), arc_integrity(D)):
        assert cert.value == 1 and cert.removal_set == ()
        check_certificate(D, cert)


def test_partition_checks():
    D1 = build(["v1", "v2", "v3", "v4"], [("v2", "v1"), ("v2", "v3"), ("v4", "v1"), ("v4", "v3")])
    chk = check_partition(D1, [["v1", "v3"], ["v2", "v4"]])
    assert chk.p == 2 and chk.is_p_partite and chk.is_complete_p_partite
    bad = check_partition(D1, [["v1", "v2"], ["v3", "v4"]])
    assert not bad.is_p_partite
    with pytest.raises(NotAPartition):
        check_partition(D1, [["v1"], ["v2", "v4"]])
    with pytest.raises(NotAPartition):
        check_partition(D1, [["v1", "v3"], ["v3", "v2", "v4"]])


def test_d2_not_complete_three_partite(fx):
    chk = check_partition(fx("D2"), [["v1", "v3"], ["v2"], ["v4", "v6"]])
    assert chk.is_p_partite and not chk.is_complete_p_partite


def test_small_examples():
    single = build(["a"], [])
    assert maximum_matching(single).size == 0
    assert max_independent_set(single).size == 1
    assert chromatic_partition(single).colors == 1
    assert min_dominating_set(single).size == 1
    tri = build(list("abc"), [("a", "b"), ("b", "c"), ("c", "a")])
    assert vertex_integrity(tri).value == 2
    two = build(["a", "b"], [("a", "b"), ("b", "a")])
    assert arc_integrity(two).value == 2
    assert vertex_integrity(two).value == 2


def test_empty_graph():
    E = build([], [])
    assert maximum_matching(E).size == 0
    assert chromatic_partition(E).colors == 0
    assert min_dominating_set(E).size == 0


def test_checker_rejects_bad_certificates(D1):
    with pytest.raises(CertificateError):
        check_certificate(D1, MatchingCertificate((Arc("v2", "v1"), Arc("v2", "v3"))))
    with pytest.raises(CertificateError):
        check_certificate(D1, IndependentSetCertificate(("v1", "v2")))
    with pytest.raises(CertificateError):
        check_certificate(D1, ColoringCertificate((("v1", "v2"), ("v3", "v4"))))
    with pytest.raises(CertificateError):
        check_certificate(D1, DominatingSetCertificate(("v2",)))
    with pytest.raises(CertificateError):
        check_certificate(D1, IntegrityCertificate("VERTEX", (), 1, 2))


# -- properties ----------------------------------------------------------------

@given(digraphs())
def test_matching_bound_and_certificate(D):
    m = maximum_matching(D)
    check_certificate(D, m)
    assert m.size <= D.order // 2
    assert m.is_perfect == (2 * m.size == D.order)


@given(digraphs())
def test_chi_alpha_at_least_n(D):
    chi = chromatic_partition(D).colors
    alpha = max_independent_set(D).size
    assert chi * alpha >= D.order


@given(digraphs())
def test_sources_in_every_dominating_set(D):
    S = set(min_dominating_set(D).vertices)
    assert degree_profile(D).sources() <= S


@given(digraphs())
def test_solvers_match_oracles(D):
    vs, arcs = oracles.as_lists(D)
    assert maximum_matching(D).size == oracles.matching_number(vs, arcs)
    assert max_independent_set(D).size == oracles.independence_number(vs, arcs)
    assert chromatic_partition(D).colors == oracles.chromatic_number(vs, arcs)
    assert min_dominating_set(D).size == oracles.domination_number(vs, arcs)


@settings(max_examples=60)
@given(digraphs(max_vertices=6))
def test_integrity_matches_exhaustive(D):
    vs, arcs = oracles.as_lists(D)
    vi, ai = vertex_integrity(D), arc_integrity(D)
    check_certificate(D, vi)
    check_certificate(D, ai)
    assert vi.value == oracles.vertex_integrity(vs, arcs)
    assert ai.value == oracles.arc_integrity(vs, arcs)


@given(digraphs())
def test_integrity_monotone_under_subdigraphs(D):
    S = induced_subdigraph(D, D.vertices[: max(1, D.order - 1)])
    S = delete_arcs(S, S.arcs[::2])
    assert vertex_integrity(S).value <= vertex_integrity(D).value
    assert arc_integrity(S).value <= arc_integrity(D).value


@given(digraphs())
def test_integrity_bounds(D):
    vi = vertex_integrity(D)
    assert 1 <= vi.value <= D.order
    assert arc_integrity(D).value >= vi.value
