import pytest

from domchrom import naive
from domchrom.enumeration import (
    CONNECTED_COUNTS,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    enumerate_connected,
    extend_connected,
)
from domchrom.graphs import GraphError, complete_bipartite, from_edge_list, is_connected


def test_connected_counts():
    for n, expected in CONNECTED_COUNTS.items():
        assert len(enumerate_connected(n)) == expected
    assert len(enumerate_connected(4)) == 6
    assert len(enumerate_connected(6)) == 112
    assert len(enumerate_connected(1)) == 1


def test_order_limits():
    with pytest.raises(GraphError, match="stream external graph6"):
        enumerate_connected(8)
    with pytest.raises(GraphError):
        enumerate_connected(0)


def test_enumeration_is_connected_and_pairwise_non_isomorphic():
    for n in range(1, 7):
        graphs = enumerate_connected(n)
        assert all(is_connected(g) for g in graphs)
        forms = {canonical_form(g) for g in graphs}
        assert len(forms) == len(graphs)


def test_enumeration_deterministic():
    a = [g.adj for g in enumerate_connected(6)]
    b = [g.adj for g in enumerate_connected(6)]
    assert a == b


def test_matches_naive_enumeration_small():
    # judge both generators with the naive full-permutation canonical form
    for n in range(1, 6):
        fast = sorted(naive.canonical_form(g) for g in enumerate_connected(n))
        slow = naive.connected_graphs(n)
        assert fast == slow


def test_canonical_form_is_isomorphism_invariant():
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    for perm in [(1, 2, 3, 4, 0), (4, 3, 2, 1, 0), (2, 0, 4, 1, 3)]:
        assert canonical_form(g.permuted(perm)) == canonical_form(g)
    assert canonical_graph(g).n == 5


def test_are_isomorphic():
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    k22, _ = complete_bipartite(2, 2)
    assert are_isomorphic(c4, k22)
    p4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    star, _ = complete_bipartite(1, 3)
    assert not are_isomorphic(p4, star)
    assert not are_isomorphic(p4, c4)


def test_extend_connected_reproduces_next_order():
    got = extend_connected(enumerate_connected(3))
    want = enumerate_connected(4)
    assert [g.adj for g in got] == [g.adj for g in want]
