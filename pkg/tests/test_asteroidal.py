from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from pathsun.asteroidal import (
    contains_induced_odd_sun,
    find_asteroidal_triples,
    find_special_asteroidal_triple,
    is_asteroidal_set,
    is_at_free,
    is_directed_path,
    is_interval,
    s_connected,
)
from pathsun.families import f11_4k, g1, g2, k_sun, s_directed_pointed
from pathsun.graph import complete, from_named_edges, path, to_set


def _brute_triples(g):
    h = to_nx(g)
    out = []
    for t in combinations(range(g.n), 3):
        if any(h.has_edge(a, b) for a, b in combinations(t, 2)):
            continue
        ok = True
        for v in t:
            rest = [w for w in t if w != v]
            sub = h.subgraph(set(h) - set(h[v]) - {v})
            if not nx.has_path(sub, rest[0], rest[1]):
                ok = False
        if ok:
            out.append(t)
    return out


@given(graphs(max_n=9))
@settings(max_examples=120)
def test_triples_match_brute_force(g):
    assert find_asteroidal_triples(g) == _brute_triples(g)


def test_three_sun_rays():
    g = g2()
    xyz = to_set(g.labels.index(c) for c in "xyz")
    assert is_asteroidal_set(g, xyz)
    assert tuple(sorted(g.labels.index(c) for c in "xyz")) in find_asteroidal_triples(g)


def test_asteroidal_set_preconditions():
    p = path(3)
    with pytest.raises(ValueError):
        is_asteroidal_set(p, 0b111)
    with pytest.raises(ValueError):
        is_asteroidal_set(p, 0b101)


def test_middle_vertex_blocks():
    assert not is_asteroidal_set(path(6), to_set([0, 2, 5]))


def test_interval_recognition():
    assert is_interval(path(6)) and is_at_free(complete(4))
    assert not is_interval(g1())
    assert not find_asteroidal_triples(path(7))


def test_f11_16_triples_live_on_rays():
    g = f11_4k(4)
    assert all(set(g.names(to_set(t))) <= {f"r{i}" for i in range(7)} for t in find_asteroidal_triples(g))


def test_special_connections():
    p = path(3)
    assert s_connected(p, 0, 2) == (True, 0b111)
    assert s_connected(p, 0, 1) == (False, None)
    two = s_directed_pointed(2)
    assert s_connected(two.graph, two.u, two.v)[0]
    g = g1()
    for a, b in combinations(range(g.n), 2):
        assert s_connected(g, a, b)[0] == s_connected(g, b, a)[0]
    with pytest.raises(ValueError):
        s_connected(p, 1, 1)


def test_odd_suns():
    assert contains_induced_odd_sun(g2())[0]
    found, s = contains_induced_odd_sun(k_sun(5))
    assert found and s == k_sun(5).vertices
    assert not contains_induced_odd_sun(k_sun(4))[0]
    assert not contains_induced_odd_sun(path(8))[0]
    assert contains_induced_odd_sun(f11_4k(3))[0]


def test_directed_path_examples():
    assert is_directed_path(g1())
    assert not is_directed_path(g2())
    hit = find_special_asteroidal_triple(g2())
    assert hit is not None and len(hit[1]) == 3
    net = from_named_edges("abcxyz", ["ab", "bc", "ac", "ax", "by", "cz"])
    assert is_directed_path(net) and not is_interval(net)
