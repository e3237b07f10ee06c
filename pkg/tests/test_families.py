from itertools import combinations

import networkx as nx
import pytest

from conftest import to_nx
from pathsun.asteroidal import find_asteroidal_triples, s_connected
from pathsun.chordal import is_chordal, maximal_cliques
from pathsun.cliquetree import enumerate_clique_trees
from pathsun.families import (
    NoPathwiseTree,
    build_TA,
    chordal_corpus,
    enumerate_small_chordal,
    f11_4k,
    f11_8,
    g1,
    g2,
    g3,
    k_sun,
    pathwise_on,
    random_chordal,
    s_directed_family,
    s_directed_pointed,
)
from pathsun.graph import GraphError, UnsupportedSize, canonical_code, is_isomorphic, to_set

CONNECTED_CHORDAL = {1: 1, 2: 1, 3: 2, 4: 5, 5: 15, 6: 58, 7: 272}


def test_corpus_matches_atlas(atlas):
    expected = {}
    for g in atlas:
        h = to_nx(g)
        if nx.is_connected(h) and nx.is_chordal(h):
            expected.setdefault(g.n, set()).add(canonical_code(g))
    for n, count in CONNECTED_CHORDAL.items():
        got = {canonical_code(g) for g in enumerate_small_chordal(n)}
        assert len(got) == count and got == expected[n]


def test_corpus_small_cases():
    three = enumerate_small_chordal(3)
    assert sorted(g.m for g in three) == [2, 3]
    assert enumerate_small_chordal(0)[0].n == 0
    assert len(chordal_corpus(4)) == 1 + 1 + 2 + 5
    with pytest.raises(UnsupportedSize):
        enumerate_small_chordal(9)


def test_k_sun():
    assert is_isomorphic(k_sun(3), g2())
    g = k_sun(5)
    rays = to_set(range(5, 10))
    assert g.is_independent(rays) and all(g.degree(r) == 2 for r in range(5, 10))
    assert g.is_clique(to_set(range(5)))
    with pytest.raises(GraphError):
        k_sun(2)


@pytest.mark.parametrize("make,n,m", [(g1, 7, 12), (g2, 6, 9), (g3, 8, 15), (f11_8, 8, 15)])
def test_witness_graph_sizes(make, n, m):
    g = make()
    assert (g.n, g.m) == (n, m) and is_chordal(g)[0]


def test_f11_reconstruction_gate():
    assert canonical_code(f11_4k(2)) == canonical_code(f11_8())
    for k in (2, 3, 4):
        assert len(maximal_cliques(f11_4k(k))) == (2 * k - 1) + 2
    g = f11_4k(4)
    assert g.n == 16
    with pytest.raises(GraphError):
        f11_4k(1)


@pytest.mark.parametrize("k", [3, 4])
def test_f11_triples_are_rays(k):
    g = f11_4k(k)
    m = 2 * k - 1
    rays = set(range(m, 2 * m))
    triples = find_asteroidal_triples(g)
    assert triples and all(set(t) <= rays for t in triples)
    assert any(not g.adj[a] & g.adj[b] & to_set(range(m)) for a, b in combinations(sorted(rays), 2))


def test_special_connection_shapes():
    sizes = {1: 3, 2: 6, 3: 8}
    for kind, n in sizes.items():
        p = s_directed_pointed(kind)
        assert p.graph.n == n and not p.graph.has_edge(p.u, p.v)
        assert s_connected(p.graph, p.u, p.v)[0]
        # swapping the endpoints gives the same pointed graph
        assert p.code() == canonical_code(p.graph, pinned=(p.v, p.u))
    three = s_directed_pointed(3).graph
    assert three.m == 16
    assert sorted(sorted(three.names(q)) for q in maximal_cliques(three)) == [
        ["a", "b", "c", "d"],
        ["a", "b", "c", "x"],
        ["a", "b", "d", "y"],
        ["a", "c", "u"],
        ["b", "d", "v"],
    ]
    assert s_directed_pointed(2).graph.m == 9


def test_special_connection_type_four():
    p = s_directed_pointed(4, 1)
    g = p.graph
    name = {x: i for i, x in enumerate(g.labels)}
    assert g.n == 9
    assert g.is_clique(to_set(name[f"z{i}"] for i in range(5)))
    assert sorted(g.names(g.adj[p.u])) == ["z0", "z1"]
    assert sorted(g.names(g.adj[p.v])) == ["z3", "z4"]
    assert s_directed_pointed(4, 2).graph.n == 13
    assert [q.graph.n for q in s_directed_family(13)] == [3, 6, 8, 9, 13]


@pytest.mark.parametrize("kind,t", [(0, None), (1, 1), (4, None), (4, 0), (5, 1)])
def test_special_connection_bad_parameters(kind, t):
    with pytest.raises(GraphError):
        s_directed_pointed(kind, t)


def test_random_chordal_is_deterministic_and_chordal():
    for seed in range(30):
        g = random_chordal(10, 5, seed)
        assert g == random_chordal(10, 5, seed)
        assert is_chordal(g)[0] and g.is_connected() and g.n == 10
    assert random_chordal(10, 5, 0) != random_chordal(10, 5, 1)


@pytest.mark.parametrize("args", [(13, 3, 0), (0, 1, 0), (6, 4, 0), (6, 0, 0)])
def test_random_chordal_parameter_errors(args):
    with pytest.raises((GraphError, UnsupportedSize)):
        random_chordal(*args)


def _seen(g, triple):
    out = 0
    for r in triple:
        out |= g.adj[r]
    return out


def test_triple_trees_for_f11_16():
    g = f11_4k(4)
    for t in find_asteroidal_triples(g):
        tree = build_TA(g, t)
        assert tree.validate() == (True, None)
        assert pathwise_on(tree, _seen(g, t)) == (True, None)


def test_triple_trees_for_f11_12_exist_only_for_half_the_triples():
    # two adjacent rays plus the ray opposite them see every core vertex,
    # so the required tree would be a clique-path tree, which does not exist
    g = f11_4k(3)
    trees = enumerate_clique_trees(g).trees
    impossible = []
    for t in find_asteroidal_triples(g):
        feasible = any(pathwise_on(tree, _seen(g, t))[0] for tree in trees)
        try:
            built = build_TA(g, t)
            assert feasible and pathwise_on(built, _seen(g, t))[0]
        except NoPathwiseTree:
            assert not feasible
            impossible.append(g.names(to_set(t)))
    assert impossible == [
        ["r0", "r1", "r3"],
        ["r0", "r2", "r3"],
        ["r0", "r2", "r4"],
        ["r1", "r2", "r4"],
        ["r1", "r3", "r4"],
    ]


def test_triple_tree_needs_a_triple():
    g = f11_4k(4)
    with pytest.raises(GraphError):
        build_TA(g, (7, 8, 0))
    with pytest.raises(GraphError):
        build_TA(g1(), (0, 1, 2))


def test_build_TA_requires_the_f11_layout():
    with pytest.raises(GraphError):
        build_TA(f11_8(), (5, 6, 7))
    relabelled = f11_4k(3).relabel(list(reversed(range(12))))
    with pytest.raises(GraphError):
        build_TA(relabelled, find_asteroidal_triples(relabelled)[0])
