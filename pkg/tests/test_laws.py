"""Instance generation, direct-formula oracles, and the suite runner."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

import hypalg.laws as laws
from hypalg import (
    CoproductKind,
    Hypergraph,
    LinComb,
    ResourceLimitError,
    canonical_key,
    coproduct,
    enumerate_hypergraphs,
    parse_hgx,
    random_hypergraph,
)
from hypalg.canon import relabel
from hypalg.laws import (
    COINTERACTION_PAIRS,
    SuiteConfig,
    check_coassoc,
    check_cointeraction,
    direct_conjugate,
    run_suite,
    suite_instances,
)

from conftest import CHER, EMPTY_EDGE, EMPTY_EDGE2, K2, LOOP, LOOP2, P3, TRIANGLE_EDGE, du, lc2


def test_enumerate_small():
    assert [h for h in enumerate_hypergraphs(0, 0)] == [Hypergraph(0, 0, ())]
    classes = list(enumerate_hypergraphs(1, 1))
    assert len(classes) == 5
    keys = {canonical_key(h) for h in classes}
    assert len(keys) == 5


def test_enumerate_matches_orbit_count():
    # brute-force orbit counting over S2 x S2 on 2x2 matrices
    import itertools as it

    seen = set()
    orbits = 0
    for bits in range(16):
        rows = (bits & 0b11, bits >> 2)
        if rows in seen:
            continue
        orbits += 1
        for ep in it.permutations(range(2)):
            for vp in it.permutations(range(2)):
                g = relabel(Hypergraph(2, 2, rows), list(ep), list(vp))
                seen.add(g.rows)
    enumerated = [h for h in enumerate_hypergraphs(2, 2) if (h.m, h.n) == (2, 2)]
    assert len(enumerated) == orbits


def test_enumerate_guard():
    with pytest.raises(ResourceLimitError):
        list(enumerate_hypergraphs(5, 4))


def test_random_hypergraph():
    assert random_hypergraph(1, 3, 4, 0).rows == (0, 0, 0)
    assert random_hypergraph(1, 3, 4, 1).rows == (0b1111,) * 3
    a = random_hypergraph(99, 4, 4, Fraction(1, 2))
    b = random_hypergraph(99, 4, 4, Fraction(1, 2))
    assert a == b
    assert random_hypergraph(98, 4, 4, Fraction(1, 2)) != a  # overwhelmingly likely


def test_direct_conjugate_oracle_examples():
    # conjugation and the closed formulas produce identical expansions
    for h in (P3, TRIANGLE_EDGE, K2, LOOP, EMPTY_EDGE):
        for kind in laws.CONJUGATE_ORACLE_KINDS:
            assert direct_conjugate(kind, h) == coproduct(kind, h), (kind.name, h)


def test_direct_delta_d_path_terms():
    got = direct_conjugate(CoproductKind("delta", "d"), P3)
    assert got == lc2(
        (1, EMPTY_EDGE2, P3),
        (2, du(LOOP, EMPTY_EDGE), CHER),
        (1, LOOP2, K2),
        (2, CHER, LOOP),
        (1, du(LOOP, LOOP), LOOP2),
        (1, P3, EMPTY_EDGE),
    )
    assert got.total() == 8


def test_direct_delta_c_triangle():
    got = direct_conjugate(CoproductKind("delta", "c"), TRIANGLE_EDGE)
    assert got == lc2((1, Hypergraph(0, 3, ()), TRIANGLE_EDGE))


def test_cointeraction_on_two_vertex_edge():
    for pair in COINTERACTION_PAIRS:
        cap, cup = pair
        if not laws.in_subspace(K2, cap.invol):
            continue
        for law, ok, ce in check_cointeraction(pair, K2, K2):
            assert ok, (law, ce)


def test_suite_runner_small_all_pass():
    cfg = SuiteConfig(max_edges=2, max_vertices=2, samples=5, seed=7)
    report = run_suite(cfg)
    assert report.all_pass
    blob = json.loads(report.to_json())
    for law, entry in blob.items():
        assert set(entry) <= {"checked", "failed", "counterexample"}
        assert entry["failed"] == 0
        assert entry["checked"] >= 1


def test_suite_runner_deterministic_across_jobs():
    cfg1 = SuiteConfig(max_edges=2, max_vertices=2, samples=8, seed=3, suites=("coassoc", "counit"))
    cfg2 = SuiteConfig(
        max_edges=2, max_vertices=2, samples=8, seed=3, suites=("coassoc", "counit"), jobs=2
    )
    assert run_suite(cfg1).to_json() == run_suite(cfg2).to_json()


def test_corrupted_coproduct_yields_recheckable_counterexample(monkeypatch):
    """Dropping one term from the vertex-split coproduct must surface a
    counterexample carrying the instance and both sides' term lists."""
    real = coproduct

    def corrupted(kind, h):
        out = real(kind, h)
        if kind == CoproductKind("Delta") and len(out) > 1:
            items = out.terms()
            return LinComb(2, dict(items[1:]))
        return out

    monkeypatch.setattr(laws, "coproduct", corrupted)
    cfg = SuiteConfig(max_edges=1, max_vertices=2, samples=0, seed=0, suites=("counit",))
    report = run_suite(cfg)
    assert not report.all_pass
    entry = report.entries["counit/Delta"]
    assert entry.failed > 0 and entry.counterexample is not None
    ce = entry.counterexample
    assert ce["lhs"] != ce["rhs"]
    # re-checkable: the serialized instance replays against the honest code
    monkeypatch.setattr(laws, "coproduct", real)
    h = parse_hgx(ce["hypergraphs"][0])
    for law, ok, _ in laws.check_counit(h):
        assert ok, law


def test_suite_instances_order_is_stable():
    cfg = SuiteConfig(max_edges=2, max_vertices=2, samples=4, seed=11)
    assert suite_instances(cfg) == suite_instances(cfg)


def test_mixed_commutation_spot():
    for h in (P3, TRIANGLE_EDGE):
        for law, ok, ce in laws.check_mixed(h):
            assert ok, (law, ce)


def test_coassoc_includes_descent_coincidence():
    names = {law for law, _, _ in check_coassoc(K2)}
    assert "coassoc/Dpp-c-coincides-id" in names
    assert "coassoc/Dpp-cd-coincides-d" in names
    assert len([n for n in names if n.startswith("coassoc/")]) == 22


def test_coassoc_counit_exhaustive_with_dual_axis():
    """All twenty coproducts are coassociative and counital on every class up
    to 3x4, and (via the dual pool) up to 4x3 for the dualized kinds."""
    cfg = SuiteConfig(max_edges=3, max_vertices=4, samples=0, seed=0, suites=("coassoc", "counit"))
    report = run_suite(cfg)
    assert report.all_pass
    assert len(report.entries) == 42  # 20 + 2 coincidence laws, 20 counit laws


def test_convolution_checks():
    for h in (P3, TRIANGLE_EDGE, K2, LOOP):
        for law, ok, ce in laws.check_convolution(h):
            assert ok, (law, h)
    # instances outside the core subspace only run the vertex-split identity
    names = [law for law, _, _ in laws.check_convolution(EMPTY_EDGE)]
    assert names == ["convolution/sum"]
