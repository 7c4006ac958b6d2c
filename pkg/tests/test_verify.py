"""Refinement to structure cuts and the per-graph property checks."""
from __future__ import annotations

import pytest

from starcut.corpus import canonical_form
from starcut.covering import cover_min_cut_detailed
from starcut.existence import decide_existence
from starcut.families import book_b5, complete, complete_bipartite, cycle, path_graph
from starcut.formats import from_graph6, to_graph6
from starcut.graph import Graph, vertex_connectivity
from starcut.stars import is_structure_cut, struct_connectivity_exact
from starcut.verify import (
    CHECK_NAMES,
    FAIL,
    PASS,
    SKIP,
    VerificationRecord,
    check_bounds,
    check_open_problem,
    find_ratio_witnesses,
    refine_detailed,
    refine_to_structure_cut,
    verify_graph,
)

# the one n<=8 graph whose covering needs the exact-solver fallback
FALLBACK_GRAPH6 = "EJf_"


def test_refine_keeps_covering_that_already_cuts():
    g = cycle(4)
    family, cut, sides, _ = cover_min_cut_detailed(g)
    result = refine_detailed(g, family, cut, sides)
    assert not result.fallback and result.iterations == 0
    assert [s.to_obj() for s in result.family] == [{"center": 0, "leaves": [1, 3]}]


def test_refine_appends_inner_cut_star_on_c7():
    g = cycle(7)
    family, cut, sides, _ = cover_min_cut_detailed(g)
    refined = refine_to_structure_cut(g, family, cut, sides)
    assert [s.to_obj() for s in refined] == [
        {"center": 0, "leaves": [1, 6]},
        {"center": 3, "leaves": [2, 4]},
    ]
    assert is_structure_cut(g, refined)
    assert len(refined) <= vertex_connectivity(g)


def test_refine_raises_when_no_structure_cut_exists():
    g = complete_bipartite(3, 3)
    family, cut, sides, _ = cover_min_cut_detailed(g)
    with pytest.raises(ValueError):
        refine_to_structure_cut(g, family, cut, sides)


def test_refine_fallback_graph_still_yields_valid_cut():
    g = from_graph6(FALLBACK_GRAPH6)
    family, cut, sides, _ = cover_min_cut_detailed(g)
    result = refine_detailed(g, family, cut, sides)
    assert result.fallback
    assert is_structure_cut(g, result.family)
    assert len(result.family) <= vertex_connectivity(g)


def test_refine_properties_over_small_corpus(corpus):
    fallbacks = []
    for n in range(4, 7):
        for g in corpus(n):
            if g.is_complete() or not decide_existence(g).exists:
                continue
            family, cut, sides, _ = cover_min_cut_detailed(g)
            result = refine_detailed(g, family, cut, sides)
            assert is_structure_cut(g, result.family)
            assert len(result.family) <= vertex_connectivity(g)
            if result.fallback:
                fallbacks.append(to_graph6(g))
    assert fallbacks == [FALLBACK_GRAPH6]


def test_verify_graph_runs_all_checks_by_default():
    record = verify_graph(book_b5())
    assert set(record.checks) == set(CHECK_NAMES)
    assert record.kappa == 3 and record.struct_kappa == 1
    assert record.certificate_rule == "Mod2Iff"
    assert not record.failed
    statuses = {c["status"] for c in record.checks.values()}
    assert statuses <= {PASS, FAIL, SKIP}
    assert record.checks["bounds"]["status"] == PASS
    assert record.checks["mod1_rule"]["status"] == SKIP


def test_verify_graph_subset_and_unknown_checks():
    record = verify_graph(cycle(6), checks=("bounds", "mod0_rule"))
    assert set(record.checks) == {"bounds", "mod0_rule"}
    with pytest.raises(ValueError):
        verify_graph(cycle(6), checks=("bounds", "nonsense"))


def test_verify_graph_disconnected_skips_everything():
    record = verify_graph(Graph(6, [(0, 1), (2, 3)]))
    assert all(c["status"] == SKIP for c in record.checks.values())
    assert record.kappa == 0 and record.struct_kappa is None


def test_verify_graph_no_cut_graphs_pass_existence_checks():
    for g in (cycle(5), cycle(6), complete(6)):
        record = verify_graph(g)
        assert not record.failed
        assert record.struct_kappa is None
        assert record.checks["bounds"]["status"] == SKIP


def test_verify_record_serialization_roundtrip():
    record = verify_graph(cycle(8))
    again = VerificationRecord.from_obj(record.to_obj())
    assert again.to_obj() == record.to_obj()
    assert again.failed == record.failed


def test_check_bounds_subset():
    record = check_bounds(cycle(9))
    assert "covering" not in record.checks and "bounds" in record.checks
    assert not record.failed


def test_find_ratio_witnesses_contains_the_book_graph(corpus):
    graphs = [g for n in range(4, 6) for g in corpus(n)]
    hits = find_ratio_witnesses(graphs)
    assert hits, "the extremal graph must appear by order 5"
    ids = {r.graph_id for r in hits}
    assert to_graph6(canonical_form(book_b5())) in ids
    for r in hits:
        assert 3 * r.struct_kappa == r.kappa
        assert not r.failed


def test_check_open_problem_shapes():
    with pytest.raises(ValueError):
        check_open_problem(cycle(6), 1)
    record = check_open_problem(cycle(9), 3)
    assert record.checks["open_problem_bounds"]["status"] == SKIP  # C9 has no claw
    record = check_open_problem(complete_bipartite(3, 6), 3)
    assert record.checks["open_problem_bounds"]["status"] == PASS
    assert record.struct_kappa == 1 and record.kappa == 3
    record = check_open_problem(Graph(4, [(0, 1), (2, 3)]), 2)
    assert record.checks["open_problem_bounds"]["status"] == SKIP


def test_check_open_problem_flags_counterexamples():
    # complete graphs sit outside the conjecture's hypothesis (they have no
    # 3-vertex-star cut) and indeed violate the kappa/m lower bound: two
    # disjoint 4-vertex stars reduce K9 to one vertex, so 3*2 < kappa = 8
    record = check_open_problem(complete(9), 3)
    assert record.failed == ["open_problem_bounds"]
    assert record.struct_kappa == 2 and record.kappa == 8
    witness = record.checks["open_problem_bounds"]["witness"]
    assert witness == {"arity": 3, "kappa": 8, "struct_kappa": 2}
