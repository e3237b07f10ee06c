"""Clique trees: validation, enumeration, and brute-force class oracles.

The oracles here decide path-graph and interval-graph membership straight
from the intersection-model definitions (a clique-path tree exists, or the
maximal cliques can be laid out on a line). They are the ground truth the
structural recognizers are checked against.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .chordal import CliqueList, clique_intersection_edges, is_chordal, maximal_cliques
from .graph import Graph, UnsupportedSize, VertexSet, bit, members

MAX_TREE_CLIQUES = 12
MAX_INTERVAL_CLIQUES = 10


class CliqueTreeError(ValueError):
    """Tree nodes do not match the maximal cliques of the graph."""


@dataclass(frozen=True)
class SubtreeView:
    nodes: frozenset[int]
    edges: tuple[tuple[int, int], ...]

    def degree(self, i: int) -> int:
        return sum(i in e for e in self.edges)

    def leaves(self) -> list[int]:
        return sorted(i for i in self.nodes if self.degree(i) <= 1)


@dataclass(frozen=True)
class CliqueTree:
    graph: Graph
    cliques: CliqueList
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        k = len(self.cliques)
        if len(self.edges) != max(k - 1, 0):
            raise CliqueTreeError(f"{len(self.edges)} edges cannot span {k} nodes")
        if _count_components(k, self.edges) > 1:
            raise CliqueTreeError("tree edges do not connect all nodes")

    def neighbors(self, i: int) -> list[int]:
        return sorted(b if a == i else a for a, b in self.edges if i in (a, b))

    def nodes_with(self, v: int) -> frozenset[int]:
        return frozenset(self.cliques.containing(v))

    def restrict(self, nodes: frozenset[int]) -> SubtreeView:
        return SubtreeView(nodes, tuple(e for e in self.edges if e[0] in nodes and e[1] in nodes))

    def subtree(self, v: int) -> SubtreeView:
        """The subgraph ``T^v`` on the cliques containing ``v``."""
        return self.restrict(self.nodes_with(v))

    def validate(self) -> tuple[bool, int | None]:
        """Check every ``T^v`` is connected; report the first vertex that fails."""
        if tuple(sorted(self.cliques)) != maximal_cliques(self.graph).cliques:
            raise CliqueTreeError("nodes are not the maximal cliques of the graph")
        for v in range(self.graph.n):
            view = self.subtree(v)
            if _count_components_on(view.nodes, view.edges) != 1:
                return False, v
        return True, None

    def is_clique_path_tree(self) -> tuple[bool, int | None]:
        """Every ``T^v`` is a path (all degrees within ``T^v`` at most 2)."""
        for v in range(self.graph.n):
            view = self.subtree(v)
            if any(view.degree(i) > 2 for i in view.nodes):
                return False, v
        return True, None

    def steiner_subtree(self, s: VertexSet) -> SubtreeView:
        """Smallest subtree whose cliques together contain every vertex of ``s``.

        Leaves are pruned while some other kept clique still covers what the
        leaf covers; ties resolve toward the lowest clique index.
        """
        if not s:
            raise ValueError("steiner_subtree needs a nonempty vertex set")
        keep = set(range(len(self.cliques)))
        changed = True
        while changed:
            changed = False
            view = self.restrict(frozenset(keep))
            for i in sorted(keep):
                if len(keep) == 1 or view.degree(i) > 1:
                    continue
                rest = 0
                for j in keep:
                    if j != i:
                        rest |= self.cliques[j]
                if (self.cliques[i] & s) & ~rest == 0:
                    keep.discard(i)
                    changed = True
                    break
        return self.restrict(frozenset(keep))

    def to_dot(self, name: str = "T") -> str:
        lines = [f"graph {name} {{"]
        for i, q in enumerate(self.cliques):
            label = ",".join(sorted(self.graph.names(q)))
            lines.append(f'  q{i} [label="{label}"];')
        for a, b in self.edges:
            lines.append(f"  q{a} -- q{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _count_components(k: int, edges) -> int:
    return _count_components_on(frozenset(range(k)), edges)


def _count_components_on(nodes: frozenset[int], edges) -> int:
    parent = {i: i for i in nodes}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = len(nodes)
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps


class _UnionFind:
    def __init__(self, k: int):
        self.parent = list(range(k))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def copy(self) -> _UnionFind:
        uf = _UnionFind(0)
        uf.parent = self.parent[:]
        return uf


def _candidate_edges(g: Graph, cl: CliqueList) -> list[tuple[int, int, int]]:
    edges = clique_intersection_edges(cl)
    if not g.is_connected():
        have = {(i, j) for _, i, j in edges}
        edges += [(0, i, j) for i in range(len(cl)) for j in range(i + 1, len(cl)) if (i, j) not in have]
    return sorted(edges, key=lambda e: (-e[0], e[1], e[2]))


def _spanning_trees(
    cl: CliqueList,
    edges: list[tuple[int, int, int]],
    weight_bound: bool,
    path_prune: bool,
) -> Iterator[tuple[tuple[int, int], ...]]:
    """Include/exclude enumeration of spanning trees of the clique graph.

    ``weight_bound`` drops partial trees that cannot reach the maximum total
    separator weight (every clique tree is a maximum-weight spanning tree).
    ``path_prune`` drops partial trees in which some ``T^v`` already has a
    node of degree 3; adding edges never lowers a degree.
    """
    k = len(cl)
    if k <= 1:
        yield ()
        return

    def completion(uf: _UnionFind, start: int) -> tuple[int, int]:
        # Kruskal over the remaining edges: (max extra weight, merges made)
        uf = uf.copy()
        extra = merges = 0
        for w, i, j in edges[start:]:
            ri, rj = uf.find(i), uf.find(j)
            if ri != rj:
                uf.parent[ri] = rj
                extra += w
                merges += 1
        return extra, merges

    best_total, merges = completion(_UnionFind(k), 0)
    if merges != k - 1:
        return
    chosen: list[tuple[int, int]] = []
    adj: list[list[int]] = [[] for _ in range(k)]

    def path_ok(i: int, j: int) -> bool:
        for a, b in ((i, j), (j, i)):
            shared = cl[a] & cl[b]
            for v in members(shared):
                if sum(cl[c] >> v & 1 for c in adj[a]) >= 2:
                    return False
        return True

    def rec(idx: int, uf: _UnionFind, weight: int, remaining: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if remaining == 0:
            yield tuple(sorted(chosen))
            return
        extra, merges = completion(uf, idx)
        if merges < remaining:
            return
        if weight_bound and weight + extra < best_total:
            return
        w, i, j = edges[idx]
        ri, rj = uf.find(i), uf.find(j)
        if ri != rj and (not path_prune or path_ok(i, j)):
            nuf = uf.copy()
            nuf.parent[ri] = rj
            chosen.append((i, j))
            adj[i].append(j)
            adj[j].append(i)
            yield from rec(idx + 1, nuf, weight + w, remaining - 1)
            adj[i].pop()
            adj[j].pop()
            chosen.pop()
        yield from rec(idx + 1, uf, weight, remaining)

    yield from rec(0, _UnionFind(k), 0, k - 1)


@dataclass
class TreeEnumeration:
    trees: list[CliqueTree]
    truncated: bool


def enumerate_clique_trees(
    g: Graph, cap: int = 100_000, prune: bool = True, max_cliques: int = MAX_TREE_CLIQUES
) -> TreeEnumeration:
    """All clique trees of a chordal graph, in a deterministic order.

    With ``prune=False`` every spanning tree of the clique-intersection graph
    is generated and filtered by :meth:`CliqueTree.validate`; with pruning the
    maximum-weight bound skips subtrees that cannot be valid. Both return the
    same list.
    """
    cl = maximal_cliques(g)
    if len(cl) > max_cliques:
        raise UnsupportedSize(f"{len(cl)} maximal cliques exceeds the limit of {max_cliques}")
    out: list[CliqueTree] = []
    for edges in _spanning_trees(cl, _candidate_edges(g, cl), prune, False):
        tree = CliqueTree(g, cl, edges)
        if tree.validate()[0]:
            if len(out) == cap:
                return TreeEnumeration(out, True)
            out.append(tree)
    return TreeEnumeration(out, False)


@dataclass
class OracleResult:
    member: bool
    tree: CliqueTree | None = None
    cycle: list[int] | None = None
    trees_examined: int = 0


def is_path_graph_oracle(
    g: Graph, prune: bool = True, max_cliques: int = MAX_TREE_CLIQUES
) -> OracleResult:
    """Search for a clique-path tree by branch and bound.

    Returns a witness tree when one exists. A ``False`` verdict means the
    search space was exhausted (or the graph is not chordal, in which case
    the induced cycle is attached).
    """
    chordal, cyc = is_chordal(g)
    if not chordal:
        return OracleResult(False, cycle=cyc)
    cl = maximal_cliques(g)
    if len(cl) > max_cliques:
        raise UnsupportedSize(f"{len(cl)} maximal cliques exceeds the limit of {max_cliques}")
    examined = 0
    for edges in _spanning_trees(cl, _candidate_edges(g, cl), prune, prune):
        examined += 1
        tree = CliqueTree(g, cl, edges)
        if tree.validate()[0] and tree.is_clique_path_tree()[0]:
            return OracleResult(True, tree=tree, trees_examined=examined)
    return OracleResult(False, trees_examined=examined)


def interval_clique_order(g: Graph, max_cliques: int = MAX_INTERVAL_CLIQUES) -> list[int] | None:
    """A linear order of the maximal cliques with every vertex's cliques
    consecutive, or ``None``. Non-chordal graphs give ``None``."""
    if not is_chordal(g)[0]:
        return None
    cl = maximal_cliques(g)
    k = len(cl)
    if k > max_cliques:
        raise UnsupportedSize(f"{k} maximal cliques exceeds the limit of {max_cliques}")
    order: list[int] = []

    def rec(used: int, closed: VertexSet) -> bool:
        if len(order) == k:
            return True
        last = cl[order[-1]] if order else 0
        for i in range(k):
            if used >> i & 1 or cl[i] & closed:
                continue
            order.append(i)
            # vertices of the previous clique missing from this one are finished
            if rec(used | bit(i), closed | (last & ~cl[i])):
                return True
            order.pop()
        return False

    return order if rec(0, 0) else None


def is_interval_oracle(g: Graph, max_cliques: int = MAX_INTERVAL_CLIQUES) -> bool:
    return interval_clique_order(g, max_cliques) is not None
