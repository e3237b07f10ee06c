"""Asteroidal sets, special connections, odd suns, and the interval and
directed-path characterizations built on them."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .chordal import is_chordal
from .families import PointedGraph, k_sun, s_directed_family
from .graph import (
    CANONICAL_MAX,
    Graph,
    GraphError,
    VertexSet,
    bit,
    canonical_code,
    members,
    to_set,
)


def _component_labels(g: Graph, v: int) -> list[int]:
    """For each vertex, the id of its component in ``G - N[v]`` (-1 if removed)."""
    labels = [-1] * g.n
    for cid, comp in enumerate(g.components_avoiding(g.adj[v] | bit(v))):
        for w in members(comp):
            labels[w] = cid
    return labels


def is_asteroidal_set(g: Graph, s: VertexSet) -> bool:
    """Every member's closed neighbourhood leaves the other members together.

    Sets with fewer than three vertices, or that are not independent, are
    rejected with ``ValueError``.
    """
    if s.bit_count() < 3:
        raise ValueError("asteroidal sets are only considered with at least three vertices")
    if not g.is_independent(s):
        raise ValueError("asteroidal set must be independent")
    for v in members(s):
        rest = s & ~bit(v)
        comp = g.component_of(next(members(rest)), g.vertices & ~(g.adj[v] | bit(v)))
        if rest & ~comp:
            return False
    return True


def find_asteroidal_triples(g: Graph) -> list[tuple[int, int, int]]:
    labels = [_component_labels(g, v) for v in range(g.n)]
    out = []
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
            continue
        if (
            labels[a][b] == labels[a][c]
            and labels[b][a] == labels[b][c]
            and labels[c][a] == labels[c][b]
        ):
            out.append((a, b, c))
    return out


def is_at_free(g: Graph) -> bool:
    return not find_asteroidal_triples(g)


def is_interval(g: Graph) -> bool:
    """Chordal and free of asteroidal triples."""
    return is_chordal(g)[0] and is_at_free(g)


# --- special connections --------------------------------------------------------


@lru_cache(maxsize=None)
def _family_codes(n_max: int) -> dict[int, set[str]]:
    by_size: dict[int, set[str]] = {}
    for p in s_directed_family(n_max):
        by_size.setdefault(p.graph.n, set()).add(p.code())
    return by_size


def s_connected(
    g: Graph, u: int, v: int, family: list[PointedGraph] | None = None
) -> tuple[bool, VertexSet | None]:
    """Look for an induced ``H`` containing ``u``, ``v`` with ``(H, u, v)``
    isomorphic to a family member; returns the witness vertex set.

    The default family is the four special-connection types, with type 4
    taken up to the largest ``t`` that fits in ``g``.
    """
    if u == v:
        raise GraphError("s_connected needs two distinct vertices")
    if g.has_edge(u, v):
        # every family member keeps its endpoints nonadjacent
        if family is None:
            return False, None
    if family is None:
        codes = _family_codes(min(g.n, CANONICAL_MAX))
    else:
        codes = {}
        for p in family:
            codes.setdefault(p.graph.n, set()).add(p.code())
    others = [w for w in range(g.n) if w not in (u, v)]
    for size in sorted(codes):
        if size > g.n:
            break
        for extra in combinations(others, size - 2):
            s = to_set(extra) | bit(u) | bit(v)
            h, back = g.induced(s)
            code = canonical_code(h, pinned=(back.index(u), back.index(v)))
            if code in codes[size]:
                return True, s
    return False, None


def find_special_asteroidal_triple(g: Graph) -> tuple[tuple[int, int, int], list[VertexSet]] | None:
    """An asteroidal triple whose three pairs are all specially connected."""
    for triple in find_asteroidal_triples(g):
        witnesses = []
        for a, b in combinations(triple, 2):
            ok, w = s_connected(g, a, b)
            if not ok:
                break
            witnesses.append(w)
        else:
            return triple, witnesses
    return None


# --- suns -------------------------------------------------------------------------


def _sun_shape(g: Graph, s: VertexSet, k: int) -> bool:
    """Cheap structural test that ``G[s]`` is a ``k``-sun."""
    rays = [v for v in members(s) if (g.adj[v] & s).bit_count() == 2]
    if len(rays) != k:
        return False
    r = to_set(rays)
    core = s & ~r
    if not g.is_clique(core) or not g.is_independent(r):
        return False
    pairs = [g.adj[x] & s for x in rays]
    if any(p & ~core for p in pairs) or len(set(pairs)) != k:
        return False
    # the ray pairs must form a single Hamiltonian cycle on the core
    deg = {c: 0 for c in members(core)}
    for p in pairs:
        for c in members(p):
            deg[c] += 1
    if any(d != 2 for d in deg.values()):
        return False
    start = next(members(core))
    seen, cur, prev = {start}, start, None
    while True:
        nxt = [c for p in pairs if p >> cur & 1 for c in members(p & ~bit(cur)) if c != prev]
        if not nxt or nxt[0] == start:
            break
        prev, cur = cur, nxt[0]
        seen.add(cur)
    return len(seen) == k


@lru_cache(maxsize=None)
def _sun_code(k: int) -> str:
    return canonical_code(k_sun(k))


def contains_induced_odd_sun(g: Graph) -> tuple[bool, VertexSet | None]:
    for k in range(3, g.n // 2 + 1, 2):
        for sub in combinations(range(g.n), 2 * k):
            s = to_set(sub)
            if not _sun_shape(g, s, k):
                continue
            if 2 * k <= CANONICAL_MAX and canonical_code(g.induced(s)[0]) != _sun_code(k):
                raise AssertionError("structural sun test disagrees with canonical code")
            return True, s
    return False, None


def is_directed_path(g: Graph) -> bool:
    """Chordal with no asteroidal triple whose pairs are all specially connected."""
    return is_chordal(g)[0] and find_special_asteroidal_triple(g) is None


def is_directed_path_via_odd_sun(g: Graph) -> bool:
    """Path graph (via sun systems) containing no induced odd sun."""
    from .sunsystem import is_path_graph_via_theorem

    return is_path_graph_via_theorem(g).member and not contains_induced_odd_sun(g)[0]
