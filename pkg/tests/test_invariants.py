import random

import pytest

from domchrom import naive
from domchrom.constructions import DEvenSpec, DOddSpec, build_d_even, build_d_odd
from domchrom.enumeration import enumerate_connected
from domchrom.graphs import GraphError, complete_bipartite, from_edge_list, is_connected
from domchrom.invariants import (
    Coloring,
    DisconnectedError,
    UndefinedInvariantError,
    chromatic_number,
    classify_dk,
    compute_report,
    dominated_chromatic_number,
    dominates_class,
    dominator_chromatic_number,
    domination_number,
    enumerate_optimal_dominator_colorings,
    is_dominated_coloring,
    is_dominating_set,
    is_dominator_coloring,
    is_proper_coloring,
    is_total_dominating_set,
    total_domination_number,
)

P4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def test_dominates_class_examples():
    k23, lab = complete_bipartite(2, 3)
    col = Coloring.from_classes([lab.group("A"), lab.group("B")])
    a_vertex = min(lab.group("A"))
    assert dominates_class(k23, a_vertex, col, col.class_of(min(lab.group("B"))))
    col = Coloring.from_classes([[0, 2], [1, 3]])
    assert dominates_class(C4, 0, col, 1)
    assert not dominates_class(P4, 0, col, 1)  # 0 not adjacent to 3


def test_dominates_class_own_singleton_convention():
    col = Coloring.from_classes([[0, 2], [1], [3]])
    assert dominates_class(P4, 3, col, 2)  # own singleton
    assert not dominates_class(P4, 0, col, 0)  # own non-singleton class


def test_dominates_class_index_errors():
    col = Coloring.from_classes([[0, 1, 2, 3]])
    with pytest.raises(GraphError):
        dominates_class(P4, 9, col, 0)
    with pytest.raises(GraphError):
        dominates_class(P4, 0, col, 4)


def test_domination_number_examples():
    for q in (2, 3, 4, 5):
        g, _ = complete_bipartite(2, q)
        assert domination_number(g)[0] == 2
    assert domination_number(from_edge_list(1, []))[0] == 1
    gamma, witness = domination_number(P4)
    assert gamma == 2 == naive.min_dominating_set(P4)[0]
    assert witness.sorted_vertices() == naive.min_dominating_set(P4)[1]


def test_total_domination_examples():
    g, _ = complete_bipartite(2, 2)
    assert total_domination_number(g)[0] == 2
    star, _ = complete_bipartite(1, 4)
    assert total_domination_number(star)[0] == 2 == naive.min_total_dominating_set(star)[0]
    godd, _ = build_d_odd(DOddSpec(3, 9))
    assert total_domination_number(godd)[0] == 3


def test_total_domination_isolated_vertex_error():
    g = from_edge_list(3, [(0, 1)])
    with pytest.raises(UndefinedInvariantError, match="vertex 2"):
        total_domination_number(g)


def test_chromatic_examples():
    assert chromatic_number(C5)[0] == 3
    k33, _ = complete_bipartite(3, 3)
    assert chromatic_number(k33)[0] == 2
    geven, _ = build_d_even(DEvenSpec(4, 12))
    assert chromatic_number(geven)[0] == 4


def test_dominator_chromatic_examples():
    for a, b in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3), (2, 5)]:
        g, _ = complete_bipartite(a, b)
        assert dominator_chromatic_number(g)[0] == 2
    chi_d, _ = dominator_chromatic_number(P4)
    assert chi_d == 3 == naive.dominator_chromatic_number(P4)
    godd, lab = build_d_odd(DOddSpec(3, 9))
    chi_d, witness = dominator_chromatic_number(godd)
    assert chi_d == 3
    # the witness is exactly the construction's class partition
    expected = Coloring.from_classes([lab.group("P1"), lab.group("P2"), lab.group("P3")])
    assert witness == expected


def test_dominated_chromatic_examples():
    k23, _ = complete_bipartite(2, 3)
    assert dominated_chromatic_number(k23)[0] == 2 == naive.dominated_chromatic_number(k23)
    assert dominated_chromatic_number(C4)[0] == 2
    geven, _ = build_d_even(DEvenSpec(4, 12))
    assert dominated_chromatic_number(geven)[0] == 4


def test_dominated_chromatic_single_vertex_error():
    with pytest.raises(UndefinedInvariantError):
        dominated_chromatic_number(from_edge_list(1, []))


def test_disconnected_rejections():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedError):
        dominator_chromatic_number(g)
    with pytest.raises(DisconnectedError):
        dominated_chromatic_number(g)
    with pytest.raises(DisconnectedError):
        classify_dk(g)
    # gamma and chi stay defined on disconnected input
    assert domination_number(g)[0] == 2
    assert chromatic_number(g)[0] == 2


def test_classify_examples():
    g, _ = complete_bipartite(2, 2)
    assert classify_dk(g).dk == 2
    star, _ = complete_bipartite(1, 3)
    report = classify_dk(star)
    assert report.dk is None and report.gamma == 1 and report.chi == 2
    godd, _ = build_d_odd(DOddSpec(3, 10))
    assert classify_dk(godd).dk == 3


def test_report_fields_and_k1():
    report = compute_report(from_edge_list(1, []))
    assert (report.gamma, report.gamma_t, report.chi, report.chi_d, report.chi_dom) == (
        1,
        None,
        1,
        1,
        None,
    )
    assert report.dk == 1
    record = report.record("@")
    assert list(record) == [
        "n",
        "edge_count",
        "gamma",
        "gamma_t",
        "chi",
        "chi_d",
        "chi_dom",
        "dk",
        "graph6",
    ]


def test_sandwich_and_witness_validity_on_sample():
    rng = random.Random(5)
    graphs = [g for n in range(2, 6) for g in enumerate_connected(n)]
    graphs += [
        g
        for g in (
            from_edge_list(
                6,
                [
                    (u, v)
                    for u in range(6)
                    for v in range(u + 1, 6)
                    if rng.random() < 0.5
                ],
            )
            for _ in range(30)
        )
        if is_connected(g)
    ]
    for g in graphs:
        r = compute_report(g)
        assert r.gamma <= (r.gamma_t if r.gamma_t is not None else r.gamma)
        assert r.chi <= r.chi_d
        if r.chi_dom is not None:
            assert r.chi <= r.chi_dom
        # witnesses re-verified through the predicates, never trusted
        assert is_dominating_set(g, r.gamma_witness.vertices)
        assert len(r.gamma_witness.vertices) == r.gamma
        if r.gamma_t_witness is not None:
            assert is_total_dominating_set(g, r.gamma_t_witness.vertices)
            assert len(r.gamma_t_witness.vertices) == r.gamma_t
        assert is_proper_coloring(g, r.chi_witness) and r.chi_witness.k == r.chi
        assert is_dominator_coloring(g, r.chi_d_witness) and r.chi_d_witness.k == r.chi_d
        if r.chi_dom_witness is not None:
            assert is_dominated_coloring(g, r.chi_dom_witness)
            assert r.chi_dom_witness.k == r.chi_dom


def test_deterministic_witnesses():
    godd, _ = build_d_odd(DOddSpec(3, 9))
    assert compute_report(godd) == compute_report(godd)


def test_lex_least_witnesses_match_naive():
    for g in enumerate_connected(5):
        gamma, witness = domination_number(g)
        n_gamma, n_witness = naive.min_dominating_set(g)
        assert (gamma, witness.sorted_vertices()) == (n_gamma, n_witness)


def test_enumerate_optimal_dominator_colorings():
    k2 = from_edge_list(2, [(0, 1)])
    cols = list(enumerate_optimal_dominator_colorings(k2, 2))
    assert cols == [Coloring.from_classes([[0], [1]])]

    cols = list(enumerate_optimal_dominator_colorings(C4, 2))
    assert cols == [Coloring.from_classes([[0, 2], [1, 3]])]

    cols = list(enumerate_optimal_dominator_colorings(P4, 3))
    expected = {
        tuple(sorted(tuple(sorted(c)) for c in blocks_to_sets(b)))
        for b in naive.dominator_colorings(P4, 3)
    }
    got = {tuple(sorted(tuple(sorted(c)) for c in col.classes)) for col in cols}
    assert got == expected
    # each exactly once
    assert len(cols) == len(got)

    with pytest.raises(GraphError, match="chi_d"):
        list(enumerate_optimal_dominator_colorings(P4, 2))


def blocks_to_sets(blocks):
    out = []
    for mask in blocks:
        cls = []
        v = 0
        while mask:
            if mask & 1:
                cls.append(v)
            mask >>= 1
            v += 1
        out.append(cls)
    return out


def test_optimal_coloring_enumeration_complete_through_n7():
    # the backtracking enumerator yields exactly the partitions the naive
    # all-set-partitions filter accepts, graph by graph
    from domchrom.invariants import invariant_values

    for n in range(2, 8):
        for g in enumerate_connected(n):
            k = invariant_values(g, early_exit_k=None)["chi_d"]
            mine = {
                tuple(sorted(tuple(sorted(c)) for c in col.classes))
                for col in enumerate_optimal_dominator_colorings(g, k)
            }
            theirs = {
                tuple(sorted(tuple(b for b in range(g.n) if m >> b & 1) for m in blocks))
                for blocks in naive.dominator_colorings(g, k)
            }
            assert mine == theirs


def test_fast_path_agrees_with_witness_path():
    from domchrom.invariants import invariant_values

    for n in range(1, 8):
        for g in enumerate_connected(n):
            v = invariant_values(g)
            r = compute_report(g)
            assert (v["gamma"], v["gamma_t"], v["chi"], v["chi_d"], v["chi_dom"]) == (
                r.gamma,
                r.gamma_t,
                r.chi,
                r.chi_d,
                r.chi_dom,
            )


def test_coloring_canonical_order_and_assignment():
    col = Coloring.from_classes([[3, 1], [0, 2]])
    assert col.classes == (frozenset({0, 2}), frozenset({1, 3}))
    assert col.assignment(4) == (0, 1, 0, 1)
    with pytest.raises(GraphError):
        Coloring.from_classes([[0], []])
    with pytest.raises(GraphError):
        col.assignment(3)
