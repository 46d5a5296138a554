import itertools
import random

import networkx as nx
import pytest

from domchrom import naive
from domchrom.constructions import DOddSpec, build_d_odd, build_d3, enumerate_d3_blueprints
from domchrom.enumeration import enumerate_connected
from domchrom.graphs import GraphError, complete_bipartite, from_edge_list
from domchrom.planarity import (
    KuratowskiWitness,
    is_planar,
    kuratowski_witness,
    lr_is_planar,
    planar_embedding,
    verify_embedding,
    verify_kuratowski,
)

K4 = from_edge_list(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
K5 = from_edge_list(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])


def test_k4_planar_with_verified_embedding():
    verdict = is_planar(K4)
    assert verdict.planar
    assert verify_embedding(K4, verdict.embedding)


def test_k5_and_k33_witnesses():
    verdict = is_planar(K5)
    assert not verdict.planar and verdict.witness.kind == "K5"
    assert verify_kuratowski(K5, verdict.witness)
    k33, _ = complete_bipartite(3, 3)
    verdict = is_planar(k33)
    assert not verdict.planar and verdict.witness.kind == "K33"
    assert verify_kuratowski(k33, verdict.witness)


def test_exhaustive_vs_minor_oracle_small():
    # all labeled graphs on up to 5 vertices, planar iff no Kuratowski minor
    for n in range(0, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = from_edge_list(n, edges)
            assert lr_is_planar(g) == naive.is_planar(g)


def test_connected_vs_minor_oracle_through_n7():
    for n in (6, 7):
        for g in enumerate_connected(n):
            assert lr_is_planar(g) == naive.is_planar(g)


def test_certificates_verify_on_enumeration():
    for n in range(1, 7):
        for g in enumerate_connected(n):
            verdict = is_planar(g)  # internal assertion re-verifies both ways
            if verdict.planar:
                assert verify_embedding(g, verdict.embedding)
            else:
                assert verify_kuratowski(g, verdict.witness)


def test_edge_count_necessary_condition():
    for n in range(3, 8):
        for g in enumerate_connected(n):
            if lr_is_planar(g):
                assert g.edge_count() <= 3 * g.n - 6


def test_random_graphs_vs_networkx():
    rng = random.Random(2024)
    for _ in range(400):
        n = rng.randint(1, 14)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < rng.choice((0.2, 0.4, 0.7))
        ]
        g = from_edge_list(n, edges)
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(edges)
        assert lr_is_planar(g) == nx.check_planarity(G)[0]


def test_disconnected_graphs():
    two_k4 = from_edge_list(
        8,
        [(a, b) for a in range(4) for b in range(a + 1, 4)]
        + [(a + 4, b + 4) for a in range(4) for b in range(a + 1, 4)],
    )
    verdict = is_planar(two_k4)
    assert verdict.planar and verify_embedding(two_k4, verdict.embedding)
    k5_plus_isolated = from_edge_list(6, [(a, b) for a in range(5) for b in range(a + 1, 5)])
    verdict = is_planar(k5_plus_isolated)
    assert not verdict.planar and verify_kuratowski(k5_plus_isolated, verdict.witness)


def test_verify_embedding_rejects_tampering():
    verdict = is_planar(K4)
    rot = [list(r) for r in verdict.embedding]
    rot[0] = [rot[0][1], rot[0][0]] + rot[0][2:]  # swap two entries
    # K4's embedding is essentially unique; a swapped rotation breaks Euler
    assert not verify_embedding(K4, tuple(tuple(r) for r in rot))
    # wrong neighbor sets are rejected outright
    assert not verify_embedding(K4, ((1, 2), (0, 2, 3), (0, 1, 3), (1, 2)))


def test_verify_kuratowski_rejects_tampering():
    verdict = is_planar(K5)
    w = verdict.witness
    # claim a K33 instead
    assert not verify_kuratowski(K5, KuratowskiWitness("K33", w.branch_vertices, w.paths))
    # drop a path
    assert not verify_kuratowski(K5, KuratowskiWitness("K5", w.branch_vertices, w.paths[:-1]))
    # a path through a non-edge
    bad = w.paths[:-1] + ((w.paths[-1][0], w.paths[-1][0] or 1),)
    assert not verify_kuratowski(K5, KuratowskiWitness("K5", w.branch_vertices, bad))


def test_kuratowski_on_planar_raises():
    with pytest.raises(GraphError):
        kuratowski_witness(K4)
    with pytest.raises(GraphError):
        planar_embedding(K5)


def test_subdivisions_are_recognized():
    # subdivide one K5 edge: still non-planar, witness has a degree-2 path vertex
    edges = [(a, b) for a in range(5) for b in range(a + 1, 5) if (a, b) != (0, 1)]
    edges += [(0, 5), (5, 1)]
    g = from_edge_list(6, edges)
    verdict = is_planar(g)
    assert not verdict.planar and verdict.witness.kind == "K5"
    assert any(len(p) == 3 for p in verdict.witness.paths)
    assert verify_kuratowski(g, verdict.witness)


def test_d3_members_are_nonplanar_with_k33_witnesses():
    godd, _ = build_d_odd(DOddSpec(3, 9))
    verdict = is_planar(godd)
    assert not verdict.planar and verify_kuratowski(godd, verdict.witness)
    for bp in enumerate_d3_blueprints(3, 4, limit=2):
        g, _ = build_d3(bp)
        verdict = is_planar(g)
        assert not verdict.planar
        assert verify_kuratowski(g, verdict.witness)
