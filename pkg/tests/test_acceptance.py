"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v``.
"""
import random
import time

import pytest

import oracles
from conftest import FIXTURES, random_corpus
from submanet import (
    Walk,
    analyze,
    arc_integrity,
    build,
    check_certificate,
    chromatic_partition,
    closed_walk_to_cycle,
    count_arborescences,
    degree_profile,
    generate_network,
    longest_path,
    max_independent_set,
    maximum_matching,
    min_dominating_set,
    reproduce,
    rule_base,
    strong_components,
    transitive_closure,
    vertex_integrity,
    walk_to_path,
)
from submanet.certificates import check_dominating_set, DominatingSetCertificate
from submanet.digraph import delete_arcs, induced_subdigraph
from submanet.errors import CertificateError
from submanet.submanifolds import rule_holds


@pytest.fixture
def verdict(capsys):
    def emit(name, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}" + (f" ({detail})" if detail else ""))
        return ok

    return emit


def _timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


# -- 1: fixture reproduction -----------------------------------------------------

# per network: partite count, matching, alpha, chi, tree root, gamma,
# longest path, (rad, diam), closure additions
TABLE = {
    "D1": (2, 2, 2, 2, None, 2, 1, (1, 1), 0),
    "D2": (3, 2, 2, 3, None, 2, 2, (1, 1), 0),
    "D3": (3, 2, 2, 3, "v5", 2, 2, (1, 2), 1),
    "D4": (3, 3, 2, 3, None, 2, 2, (1, 2), 1),
    "D5": (3, 3, 3, 3, "v7", 3, 3, (1, 2), 5),
    "D6": (3, 3, 3, 3, "v7", 2, 3, (1, 2), 4),
}
PERFECT = {"D1", "D4"}
THM = {"D1": "Thm3.1", "D2": "Thm3.2", "D3": "Thm3.3", "D4": "Thm3.4", "D5": "Thm3.5", "D6": "Thm3.6"}
EXPECTED_DEVIATIONS = {
    "D1.center",
    "D2.center",
    "Thm3.3.v.unique",
    "Thm3.4.ii.half_arcs",
    "D6.size",
    "Cor3.8.vertex.strict",
    "Cor3.8.arc.strict",
}


def test_criterion_1_fixture_reproduction(verdict):
    result, elapsed = _timed(lambda: reproduce("ALL"))
    problems = []
    for name, (p, mu, alpha, chi, root, gamma, lp, rd, tc) in TABLE.items():
        t = THM[name]

        def got(cid):
            r = result.by_id(cid)
            if r.verdict.value != "MATCH":
                problems.append(f"{cid} is {r.verdict.value}")
            return r.computed

        part = got(f"{t}.i")
        if part["p"] != p or not part["p_partite"] or (name == "D1" and not part.get("complete")):
            problems.append(f"{t}.i")
        if got(f"{t}.ii") != mu:
            problems.append(f"{t}.ii")
        if name in PERFECT and got(f"{t}.ii.perfect") is not True:
            problems.append(f"{t}.ii.perfect")
        if got(f"{t}.iii") != alpha:
            problems.append(f"{t}.iii")
        if got(f"{t}.iv") != chi:
            problems.append(f"{t}.iv")
        if got(f"{t}.v") != (root is not None):
            problems.append(f"{t}.v")
        if got(f"{t}.v.roots") != ([root] if root else []):
            problems.append(f"{t}.v.roots")
        if got(f"{t}.vi") != gamma:
            problems.append(f"{t}.vi")
        if got(f"{name}.longest_path") != lp:
            problems.append(f"{name}.longest_path")
        if (got(f"{name}.radius"), got(f"{name}.diameter")) != rd:
            problems.append(f"{name}.radius/diameter")
        if len(got(f"{name}.closure_additions")) != tc:
            problems.append(f"{name}.closure_additions")
        for i in ("i", "ii", "iii"):
            got(f"Thm3.7.{i}.{name}")
    deviations = {r.id for r in result.deviations}
    if deviations != EXPECTED_DEVIATIONS:
        problems.append(f"deviation set {sorted(deviations)}")
    if result.mismatches:
        problems.append(f"{len(result.mismatches)} MISMATCH")
    if elapsed >= 5.0:
        problems.append(f"took {elapsed:.2f}s")
    ok = not problems and result.exit_code == 0
    verdict(
        "C1 fixture reproduction",
        ok,
        f"{len(result.results)} claims, {len(deviations)} KNOWN_DEVIATION, "
        f"{len(result.mismatches)} MISMATCH, {elapsed:.2f}s" + (f"; {problems}" if problems else ""),
    )
    assert ok, problems


# -- 2: arborescence counts -----------------------------------------------------

def test_criterion_2_arborescence_counts(verdict, fx):
    rows = []
    for name, root, stated in (("D3", "v5", 6), ("D5", "v7", 24)):
        D = fx(name)
        brute = oracles.arborescence_count(*oracles.as_lists(D), root)
        ours = count_arborescences(D, root)
        rows.append((name, root, stated, brute, ours))
    ok = all(s == b == o for _, _, s, b, o in rows)
    verdict("C2 arborescence counts", ok, ", ".join(f"{n}/{r}: {o} (oracle {b})" for n, r, _, b, o in rows))
    assert ok, rows


# -- 3: integrity ----------------------------------------------------------------

def _random_pair(rng):
    vs, arcs = oracles.random_digraph_lists(rng, n_max=7)
    D = build(vs, arcs)
    keep = [v for v in vs if rng.random() < 0.7] or vs[:1]
    S = induced_subdigraph(D, keep)
    S = delete_arcs(S, [a for a in S.arcs if rng.random() < 0.3])
    return S, D


def test_criterion_3_integrity(verdict, fx):
    start = time.perf_counter()
    problems = []
    for name in FIXTURES:
        D = fx(name)
        vs, arcs = oracles.as_lists(D)
        vi, ai = vertex_integrity(D), arc_integrity(D)
        brute_v = oracles.vertex_integrity(vs, arcs)
        brute_a = oracles.arc_integrity_full(vs, arcs)
        if not (vi.value == ai.value == brute_v == brute_a == 1):
            problems.append(f"{name}: I={vi.value} I'={ai.value} oracle {brute_v}/{brute_a}")
        if vi.removal_set or ai.removal_set:
            problems.append(f"{name}: nonempty F")
    rng = random.Random(7)
    bad_pairs = 0
    for _ in range(200):
        S, D = _random_pair(rng)
        if vertex_integrity(S).value > vertex_integrity(D).value:
            bad_pairs += 1
        if arc_integrity(S).value > arc_integrity(D).value:
            bad_pairs += 1
    if bad_pairs:
        problems.append(f"{bad_pairs} monotonicity failures")
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        problems.append(f"took {elapsed:.1f}s")
    ok = not problems
    verdict("C3 integrity", ok, f"6 fixtures = 1 with F empty, 200 pairs monotone, {elapsed:.1f}s"
            + (f"; {problems}" if problems else ""))
    assert ok, problems


# -- 4: oracle equivalence -----------------------------------------------------

def test_criterion_4_oracle_equivalence(verdict):
    start = time.perf_counter()
    failures = {}
    corpus = random_corpus()
    for D in corpus:
        vs, arcs = oracles.as_lists(D)
        checks = {
            "matching": maximum_matching(D).size == oracles.matching_number(vs, arcs),
            "independence": max_independent_set(D).size == oracles.independence_number(vs, arcs),
            "chromatic": chromatic_partition(D).colors == oracles.chromatic_number(vs, arcs),
            "domination": min_dominating_set(D).size == oracles.domination_number(vs, arcs),
            "longest_path": longest_path(D).length == oracles.longest_path_length(vs, arcs),
            "closure": transitive_closure(D).arc_set == oracles.closure_arcs(vs, arcs),
            "strong_components": set(strong_components(D).components) == oracles.strong_components(vs, arcs),
        }
        for k, good in checks.items():
            if not good:
                failures[k] = failures.get(k, 0) + 1
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300 and len(corpus) == 200
    verdict("C4 oracle equivalence", ok, f"{len(corpus)} graphs x 7 invariants, {elapsed:.1f}s"
            + (f"; failures {failures}" if failures else ""))
    assert ok, failures


# -- 5: certificates and invariant properties -----------------------------------

def _random_walk(D, rng, steps=8):
    walk = [rng.choice(D.vertices)]
    for _ in range(steps):
        nxt = D.out_neighbors(walk[-1])
        if not nxt:
            break
        walk.append(rng.choice(nxt))
    return Walk(walk)


def test_criterion_5_certificates_and_properties(verdict, fx):
    rng = random.Random(5)
    graphs = random_corpus() + [fx(n) for n in FIXTURES]
    certs = 0
    problems = []
    for D in graphs:
        report = analyze(D)
        for cert in report.certificates():
            certs += 1
            try:
                check_certificate(D, cert)
            except CertificateError as exc:
                problems.append(f"certificate: {exc}")
        # arc-subset property of walk reduction
        for _ in range(5):
            W = _random_walk(D, rng)
            P = closed_walk_to_cycle(D, W) if W.is_closed and W.length else walk_to_path(D, W)
            if not set(P.arcs) <= set(W.arcs):
                problems.append(f"arcs not a subset for {W.vertices}")
        T = transitive_closure(D)
        if transitive_closure(T) != T:
            problems.append("closure not idempotent")
        n = D.order
        if report.coloring.colors * report.independent_set.size < n:
            problems.append("chi * alpha < n")
        # a set missing a source is contained in V - {s}; domination is
        # upward closed, so V - {s} failing covers every such set
        for s in degree_profile(D).sources():
            if s not in report.dominating_set.vertices:
                problems.append("source outside dominating set")
            try:
                check_dominating_set(D, DominatingSetCertificate(tuple(v for v in D.vertices if v != s)))
                problems.append(f"V - {s} dominates")
            except CertificateError:
                pass
    ok = not problems
    verdict("C5 certificate validity", ok, f"{certs} certificates over {len(graphs)} graphs"
            + (f"; {problems[:3]}" if problems else ""))
    assert ok, problems[:10]


# -- 6: rule engine -----------------------------------------------------------

def test_criterion_6_rule_engine(verdict):
    D1 = generate_network(arc_policy="FIXTURE(D1)")
    direct = generate_network(D1.vertices, arc_policy="DIRECT_RULES")
    failing = [str(r) for r in rule_base() if not rule_holds(r)]
    ok = direct == D1 and not failing
    verdict("C6 rule engine consistency", ok, f"{len(rule_base())} rules normalize; DIRECT_RULES(D1) == FIXTURE(D1): {direct == D1}")
    assert ok, failing
