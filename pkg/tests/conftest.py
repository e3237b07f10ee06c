import networkx as nx
import pytest
from hypothesis import strategies as st

from pathsun.graph import Graph, from_edge_list


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return from_edge_list(len(index), [(index[a], index[b]) for a, b in h.edges])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def permuted(draw, g: Graph) -> Graph:
    perm = draw(st.permutations(range(g.n)))
    return g.relabel(perm)


@pytest.fixture(scope="session")
def atlas() -> list[Graph]:
    """Every graph on 1..7 vertices, one per isomorphism class."""
    return [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() > 0]
