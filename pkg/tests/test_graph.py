import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, to_nx
from pathsun.graph import (
    Graph,
    GraphError,
    UnsupportedSize,
    canonical_code,
    complete,
    cycle,
    format_dot,
    format_edge_list,
    from_edge_list,
    from_graph6,
    from_named_edges,
    incomparable,
    is_isomorphic,
    members,
    parse_edge_list,
    path,
    to_graph6,
    to_set,
)


def test_set_helpers():
    s = to_set([5, 0, 3])
    assert list(members(s)) == [0, 3, 5]
    assert incomparable(0b011, 0b110)
    assert not incomparable(0b010, 0b110)
    assert not incomparable(0b110, 0b110)


def test_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(1, (0b1,))
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(GraphError):
        from_edge_list(65, [])


def test_graph6_hand_decoded_star():
    g = from_graph6("D?{")
    assert g.n == 5
    assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert to_graph6(g) == "D?{"


def test_graph6_small_values():
    assert to_graph6(Graph(1, (0,))) == "@"
    assert to_graph6(Graph(0, ())) == "?"
    assert to_graph6(complete(3)) == "Bw"
    assert from_graph6("Bw") == complete(3)


def test_graph6_errors_name_the_offset():
    with pytest.raises(GraphError, match="byte"):
        from_graph6("D?")
    with pytest.raises(GraphError):
        from_graph6("D?\x7f")


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


@given(graphs(max_n=9))
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_with_names_and_comments():
    g = parse_edge_list("# triangle plus pendant\nn 4\na b\nb c  # closing\nc a\nc d\n")
    assert g.labels == ("a", "b", "c", "d")
    assert g.m == 4 and g.degree(2) == 3


@pytest.mark.parametrize("text", ["", "n x\n", "n 2\n0 1 2\n", "n 1\na b\n"])
def test_edge_list_errors(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


def test_components_of_three_sun():
    g = from_named_edges("abcxyz", ["ab", "ac", "bc", "az", "cz", "by", "cy", "xa", "xb"])
    x = g.labels.index("x")
    comps = g.components_avoiding(g.adj[x] | 1 << x)
    assert sorted(sorted(g.names(c)) for c in comps) == [["c", "y", "z"]]
    assert g.is_connected()


def test_induced_keeps_names_and_back_map():
    g = from_named_edges("abcd", ["ab", "bc", "cd"])
    h, back = g.induced(to_set([1, 3]))
    assert h.labels == ("b", "d") and back == (1, 3) and h.m == 0


@given(graphs(max_n=8), st.data())
@settings(max_examples=60)
def test_canonical_code_ignores_labelling(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    assert canonical_code(g.relabel(perm)) == canonical_code(g)


def test_canonical_code_separates_atlas(atlas):
    codes = {canonical_code(g) for g in atlas}
    assert len(codes) == len(atlas)


@given(graphs(max_n=7), graphs(max_n=7))
@settings(max_examples=80)
def test_isomorphism_matches_networkx(g, h):
    import networkx as nx

    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_pinned_code_distinguishes_endpoints():
    p = path(4)
    assert canonical_code(p, pinned=(0, 3)) == canonical_code(p, pinned=(3, 0))
    assert canonical_code(p, pinned=(0, 3)) != canonical_code(p, pinned=(0, 2))


def test_canonical_code_cap():
    with pytest.raises(UnsupportedSize):
        canonical_code(cycle(13))


def test_dot_marks_vertices():
    text = format_dot(path(3), marked=(0, 2))
    assert text.count("doublecircle") == 2 and "v0 -- v1;" in text
