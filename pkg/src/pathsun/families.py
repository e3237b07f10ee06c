"""Generators for the named graph families and the small chordal corpus.

Every generator checks its own output against the relevant recognizer before
returning it, so a transcription slip fails loudly instead of poisoning the
cross-validation suites.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass

from .chordal import is_chordal, maximal_cliques
from .graph import (
    Graph,
    GraphError,
    UnsupportedSize,
    bit,
    canonical_code,
    from_edge_list,
    from_named_edges,
    members,
    to_set,
    VertexSet,
)

MAX_CORPUS_N = 7
MAX_RANDOM_N = 12
RANDOM_ATTEMPTS = 1000


@dataclass(frozen=True)
class PointedGraph:
    graph: Graph
    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise GraphError("pointed graph needs two distinct vertices")
        if not (0 <= self.u < self.graph.n and 0 <= self.v < self.graph.n):
            raise GraphError("distinguished vertex out of range")

    def code(self) -> str:
        return canonical_code(self.graph, pinned=(self.u, self.v))


def k_sun(k: int) -> Graph:
    """Core ``c_0..c_{k-1}`` (ids 0..k-1) and rays ``r_i`` (ids k..2k-1),
    ray ``r_i`` adjacent to ``c_i`` and ``c_{i+1 mod k}``."""
    if k < 3:
        raise GraphError(f"k-sun needs k >= 3, got {k}")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for i in range(k):
        edges += [(k + i, i), (k + i, (i + 1) % k)]
    labels = [f"c{i}" for i in range(k)] + [f"r{i}" for i in range(k)]
    g = from_edge_list(2 * k, edges, labels)
    assert is_chordal(g)[0]
    return g


def g1() -> Graph:
    """Directed path graph that is not an interval graph."""
    return from_named_edges(
        "abcdxyz",
        ["xa", "xd", "ab", "ac", "ad", "bc", "bd", "cd", "bz", "cz", "dy", "cy"],
    )


def g2() -> Graph:
    """The 3-sun: a path graph that is not a directed path graph."""
    return from_named_edges("abcxyz", ["ab", "ac", "bc", "az", "cz", "by", "cy", "xa", "xb"])


def g3() -> Graph:
    """Chordal graph that is not a path graph."""
    return from_named_edges(
        "abcdexyz",
        ["ab", "ae", "ad", "ac", "be", "bd", "bc", "ed", "dc", "az", "ez", "by", "cy", "ax", "bx"],
    )


def f11_8() -> Graph:
    """Core triangle ``u v w``; ``x``, ``y`` see the whole core; three rays
    (``p``, ``q``, ``s``) attached to the core pairs ``uv``, ``uw``, ``vw``."""
    return from_named_edges(
        "uvwxypqs",
        ["uv", "uw", "vw", "xu", "xv", "xw", "yu", "yv", "yw", "pu", "pv", "qu", "qw", "sv", "sw"],
    )


def f11_4k(k: int) -> Graph:
    """Reconstructed ``F11(4k)``: a ``(2k-1)``-sun plus two vertices ``x``,
    ``y`` that are adjacent to every core vertex but not to each other.

    Core ids ``0..2k-2``, rays ``2k-1..4k-3``, then ``x`` and ``y``. The
    construction is checked against ``f11_8`` at ``k = 2`` and against the
    ``|R| + 2`` maximal-clique count.
    """
    if k < 2:
        raise GraphError(f"F11(4k) needs k >= 2, got {k}")
    m = 2 * k - 1
    sun = k_sun(m)
    x, y = 2 * m, 2 * m + 1
    edges = sun.edges() + [(x, c) for c in range(m)] + [(y, c) for c in range(m)]
    labels = list(sun.labels) + ["x", "y"]
    g = from_edge_list(4 * k, edges, labels)
    if len(maximal_cliques(g)) != m + 2:
        raise AssertionError("F11(4k) reconstruction: clique count is not |R| + 2")
    return g


def s_directed_pointed(kind: int, t: int | None = None) -> PointedGraph:
    """Members of the special-connection family, with ``u``, ``v`` marked."""
    if kind == 1:
        if t is not None:
            raise GraphError("type 1 takes no parameter")
        g = from_named_edges("uwv", ["uw", "wv"])
    elif kind == 2:
        if t is not None:
            raise GraphError("type 2 takes no parameter")
        g = from_named_edges("uvabcd", ["ua", "uc", "ab", "bc", "ac", "bd", "cd", "bv", "dv"])
    elif kind == 3:
        if t is not None:
            raise GraphError("type 3 takes no parameter")
        cliques = ["uac", "vbd", "abcd", "xabc", "yabd"]
        edges = sorted({a + b for q in cliques for a in q for b in q if a < b})
        g = from_named_edges("uvabcdxy", edges)
    elif kind == 4:
        if t is None or t < 1:
            raise GraphError("type 4 needs t >= 1")
        zs = 2 * t + 3  # z_0 .. z_{2t+2}
        # ids: u, v, z_0..z_{2t+2}, z'_1..z'_{2t}
        z = lambda i: 2 + i
        prime = {0: 0, 2 * t + 1: 1}
        for i in range(1, 2 * t + 1):
            prime[i] = 2 + zs + i - 1
        edges = [(z(i), z(j)) for i in range(zs) for j in range(i + 1, zs)]
        for kk in range(2 * t + 2):
            edges += [(prime[kk], z(kk)), (prime[kk], z(kk + 1))]
        labels = ["u", "v"] + [f"z{i}" for i in range(zs)] + [f"z{i}'" for i in range(1, 2 * t + 1)]
        g = from_edge_list(len(labels), edges, labels)
    else:
        raise GraphError(f"special connection type must be 1..4, got {kind}")
    return PointedGraph(g, g.labels.index("u"), g.labels.index("v"))


def s_directed_family(n_max: int) -> list[PointedGraph]:
    """All family members with at most ``n_max`` vertices."""
    out = [s_directed_pointed(k) for k in (1, 2, 3)]
    t = 1
    while 4 * t + 5 <= n_max:
        out.append(s_directed_pointed(4, t))
        t += 1
    return [p for p in out if p.graph.n <= n_max]


# --- corpus -----------------------------------------------------------------


def _clique_subsets(g: Graph) -> Iterator[int]:
    """Every nonempty clique of ``g``."""

    def rec(current: int, cand: int) -> Iterator[int]:
        for v in members(cand):
            nxt = current | bit(v)
            yield nxt
            yield from rec(nxt, cand & g.adj[v] & ~((bit(v) << 1) - 1))

    yield from rec(0, g.vertices)


def enumerate_small_chordal(n: int) -> list[Graph]:
    """Connected chordal graphs on ``n`` vertices, one per isomorphism class.

    Grown by attaching a new simplicial vertex to a nonempty clique of every
    class on ``n - 1`` vertices; every connected chordal graph arises this way
    because deleting one of its simplicial vertices leaves a connected chordal
    graph. Classes are deduplicated by canonical code and sorted by it.
    """
    if n > MAX_CORPUS_N + 1:
        raise UnsupportedSize(f"corpus generation supports n <= {MAX_CORPUS_N + 1}")
    if n < 0:
        raise GraphError("n must be nonnegative")
    if n == 0:
        return [Graph(0, ())]
    level = {canonical_code(Graph(1, (0,))): Graph(1, (0,))}
    for _ in range(1, n):
        nxt: dict[str, Graph] = {}
        for g in level.values():
            for q in _clique_subsets(g):
                h = g.add_vertex(q)
                code = canonical_code(h)
                if code not in nxt:
                    nxt[code] = h
        level = nxt
    out = [level[c] for c in sorted(level)]
    assert all(is_chordal(g)[0] and g.is_connected() for g in out)
    return out


def chordal_corpus(n_max: int, n_min: int = 1) -> list[Graph]:
    out: list[Graph] = []
    for n in range(n_min, n_max + 1):
        out.extend(enumerate_small_chordal(n))
    return out


def random_chordal(n: int, clique_budget: int, seed: int, max_span: int = 4) -> Graph:
    """Connected chordal graph from a random subtree model.

    A random tree on ``clique_budget`` nodes is drawn and each node gets one
    private vertex. Every further vertex takes a random connected subtree of
    2 to ``max_span`` nodes. Adjacency is subtree intersection, so the result
    always has a clique tree; draws that come out disconnected are redrawn
    from the same generator, keeping the output a function of the seed.
    """
    if not 1 <= n <= MAX_RANDOM_N:
        raise UnsupportedSize(f"random_chordal supports 1 <= n <= {MAX_RANDOM_N}")
    if not 1 <= clique_budget <= (n + 1) // 2:
        # every tree edge needs a shared vertex, so n - budget >= budget - 1
        raise GraphError(f"clique_budget must be between 1 and {(n + 1) // 2} for n = {n}")
    if max_span < 2:
        raise GraphError("max_span must be at least 2")
    rng = random.Random(seed)
    for _ in range(RANDOM_ATTEMPTS):
        tadj: list[list[int]] = [[] for _ in range(clique_budget)]
        for i in range(1, clique_budget):
            j = rng.randrange(i)
            tadj[i].append(j)
            tadj[j].append(i)
        subtrees = [{i} for i in range(clique_budget)]
        for _ in range(clique_budget, n):
            sub = {rng.randrange(clique_budget)}
            target = rng.randint(2, max_span)
            while len(sub) < target:
                frontier = sorted({w for s in sub for w in tadj[s]} - sub)
                if not frontier:
                    break
                sub.add(rng.choice(frontier))
            subtrees.append(sub)
        edges = [(a, b) for a in range(n) for b in range(a + 1, n) if subtrees[a] & subtrees[b]]
        g = from_edge_list(n, edges)
        if g.is_connected():
            assert is_chordal(g)[0]
            return g
    raise GraphError(f"no connected draw in {RANDOM_ATTEMPTS} attempts; lower clique_budget")


# --- clique trees for F11(4k) ---------------------------------------------------


class NoPathwiseTree(ValueError):
    """No clique tree keeps ``T^v`` a path for every ``v`` seen by the triple.

    ``cycle`` lists rays that must pairwise alternate between the two central
    cliques around an odd cycle.
    """

    def __init__(self, message: str, cycle: list[int]):
        super().__init__(message)
        self.cycle = cycle


def _f11_layout(g: Graph) -> tuple[int, list[int], int, int]:
    m = (g.n - 2) // 2
    if g.n % 4 or g.n < 12 or g.adj != f11_4k(g.n // 4).adj:
        raise GraphError("expected f11_4k(k) for some k >= 3, in its own labelling")
    return m, list(range(m, 2 * m)), 2 * m, 2 * m + 1


def build_TA(g: Graph, triple: tuple[int, int, int]):
    """Clique tree of ``f11_4k(k)`` in which ``T^v`` is a path for every
    neighbour ``v`` of the asteroidal triple.

    ``Q_x`` and ``Q_y`` (core plus ``x`` or ``y``) are joined and every ray
    clique hangs off one of them. Two ray cliques sharing a vertex seen by
    the triple must hang off different central cliques; these forced pairs
    are two-coloured, each component starting with its smallest triple ray
    on ``Q_x``. Unconstrained rays alternate, smallest first. When the forced
    pairs close an odd cycle :class:`NoPathwiseTree` is raised.
    """
    from .asteroidal import find_asteroidal_triples
    from .cliquetree import CliqueTree

    m, rays, x, y = _f11_layout(g)
    triple = tuple(sorted(triple))
    if triple not in find_asteroidal_triples(g):
        raise GraphError(f"{list(triple)} is not an asteroidal triple")
    in_a = {r for r in triple}
    # rays i and i+1 share core vertex i+1
    forced = [(rays[i], rays[(i + 1) % m]) for i in range(m) if rays[i] in in_a or rays[(i + 1) % m] in in_a]
    adj: dict[int, list[int]] = {r: [] for r in rays}
    for a, b in forced:
        adj[a].append(b)
        adj[b].append(a)
    side: dict[int, int] = {}
    for start in [r for r in triple] + rays:
        if start in side or not adj[start]:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in side:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    raise NoPathwiseTree(
                        f"rays {g.names(to_set(triple))} force an odd alternation around the sun",
                        [r for r in rays if adj[r]],
                    )
    turn = 0
    for r in rays:
        if r not in side:
            side[r] = turn
            turn ^= 1
    cl = maximal_cliques(g)
    index = {q: i for i, q in enumerate(cl)}
    core = to_set(range(m))
    qx, qy = index[core | bit(x)], index[core | bit(y)]
    edges = [tuple(sorted((qx, qy)))]
    for r in rays:
        qr = index[g.adj[r] | bit(r)]
        edges.append(tuple(sorted((qr, qy if side[r] else qx))))
    return CliqueTree(g, cl, tuple(sorted(edges)))


def pathwise_on(tree, vertices: VertexSet) -> tuple[bool, int | None]:
    """``T^v`` is a path for every ``v`` in ``vertices``; else the first bad ``v``."""
    for v in members(vertices):
        view = tree.subtree(v)
        if any(view.degree(i) > 2 for i in view.nodes) or len(view.edges) != len(view.nodes) - 1:
            return False, v
    return True, None
