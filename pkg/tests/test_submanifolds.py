import pytest

from submanet import SubmanifoldClass as H
from submanet import derivation_report, fixture, generate_network, rule_base
from submanet.errors import UnknownFixture
from submanet.submanifolds import (
    FIXTURE_NAMES,
    HALF_PI,
    ZERO,
    SlotKind,
    angle,
    apply_condition,
    normalize,
    rule_holds,
    zero,
)


def test_every_rule_normalizes():
    rules = rule_base()
    assert len(rules) == 19
    bad = [str(r) for r in rules if not rule_holds(r)]
    assert bad == []


def test_semi_slant_theta_half_pi_is_cr():
    res = normalize(apply_condition(H.SEMI_SLANT.structure, [angle("D_theta", HALF_PI)]))
    assert res == normalize(H.CR.structure)


def test_hemi_slant_theta_zero_is_cr():
    res = normalize(apply_condition(H.HEMI_SLANT.structure, [angle("D_theta", ZERO)]))
    assert res == (SlotKind.INVARIANT, SlotKind.ANTI_INVARIANT)


def test_bi_slant_both_zero_is_holomorphic():
    conds = [angle("D_theta1", ZERO), angle("D_theta2", ZERO)]
    assert normalize(apply_condition(H.BI_SLANT.structure, conds)) == (SlotKind.INVARIANT,)


def test_bi_slant_one_slot_vanishing_is_slant():
    assert normalize(apply_condition(H.BI_SLANT.structure, [zero("D_theta2")])) == (SlotKind.SLANT,)


def test_condition_errors():
    with pytest.raises(ValueError):
        angle("D_theta", "pi/3")
    with pytest.raises(KeyError):
        apply_condition(H.CR.structure, [zero("nope")])
    with pytest.raises(ValueError):
        apply_condition(H.CR.structure, [angle("D1", ZERO)])


def test_direct_rules_on_d1_classes_equals_fixture():
    D1 = generate_network(arc_policy="FIXTURE(D1)")
    classes = [H.HOLOMORPHIC, H.CR, H.ANTI_INVARIANT, H.SLANT]
    G = generate_network(classes)
    assert G == D1
    assert generate_network(D1.vertices) == D1


def test_policy_aliases():
    assert generate_network(arc_policy="D3") == generate_network(arc_policy="FIXTURE(D3)")
    with pytest.raises(ValueError):
        generate_network(arc_policy="whatever")
    with pytest.raises(UnknownFixture):
        generate_network(arc_policy="FIXTURE(D9)")


def test_rules_only_point_down_the_hierarchy():
    G = generate_network()
    assert {v for v in G.vertices if G.in_degree(v) == 0} == {H.BI_SLANT.label}
    assert {v for v in G.vertices if G.out_degree(v) == 0} == {H.HOLOMORPHIC.label, H.ANTI_INVARIANT.label}


def test_fixtures_nest():
    chain = ["D2", "D4", "D5", "D6"]
    for small, big in zip(chain, chain[1:]):
        a, b = (generate_network(arc_policy=n) for n in (small, big))
        assert set(a.vertices) <= set(b.vertices)
        assert a.arc_set <= b.arc_set
    assert generate_network(arc_policy="D1").arc_set <= generate_network(arc_policy="D3").arc_set


def test_fixture_sizes():
    sizes = {n: generate_network(arc_policy=n).size for n in FIXTURE_NAMES}
    assert sizes == {"D1": 4, "D2": 7, "D3": 7, "D4": 10, "D5": 12, "D6": 14}


def test_fixture_object():
    f = fixture("D5")
    assert f.classes["v7"] is H.BI_SLANT
    assert f.expected["independence"] == 3
    with pytest.raises(UnknownFixture):
        fixture("D0")


def test_derivation_report_d1():
    r = derivation_report(generate_network(arc_policy="D1"))
    assert r.underivable == {"v2", "v4"}
    assert r.non_generative == {"v1", "v3"}
    assert r.derivers["v1"] == {"v2", "v4"}


def test_derivation_report_d5():
    r = derivation_report(generate_network(arc_policy="D5"))
    assert r.underivable == {"v7"}
    assert r.derives["v7"] == {"v1", "v2", "v3", "v4", "v5", "v6"}
    assert "v7" in r.derivable_from["v1"]
