"""Flowers, sun systems, their auxiliary graphs, and the sun-system test for
path graphs.

A flower here is always the family of maximal cliques of the induced
subgraph on the flower vertices. A sun system is a flower plus an
asteroidal, independent set of rays whose neighbourhoods sit inside the
flower. The auxiliary graph records which rays are forced onto opposite
sides of the core in a clique-path tree; an odd cycle there rules the
graph out.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .asteroidal import find_asteroidal_triples, is_asteroidal_set
from .chordal import maximal_cliques, require_chordal
from .graph import Graph, UnsupportedSize, VertexSet, bit, incomparable, is_subset, members, to_set

MAX_SEARCH_N = 12


class FlowerRejected(ValueError):
    """The cliques of the candidate flower share no common vertex."""

    def __init__(self, message: str, pair: tuple[VertexSet, VertexSet] | None = None):
        super().__init__(message)
        self.pair = pair


class SunSystemRejected(ValueError):
    """A candidate split ``(F, R)`` is not a sun system; the message names
    the first invariant that failed."""


@dataclass(frozen=True)
class Flower:
    petal_cliques: tuple[VertexSet, ...]
    core: VertexSet

    @property
    def petals(self) -> tuple[VertexSet, ...]:
        return tuple(p & ~self.core for p in self.petal_cliques)

    @property
    def is_trivial(self) -> bool:
        return len(self.petal_cliques) == 1

    @property
    def vertices(self) -> VertexSet:
        out = 0
        for p in self.petal_cliques:
            out |= p
        return out


def try_flower(g: Graph, f: VertexSet) -> Flower:
    """Flower on ``G[F]`` with the maximal cliques as petal cliques."""
    if not f:
        raise ValueError("flower vertex set must be nonempty")
    h, back = g.induced(f)
    cliques = tuple(sorted(_lift(q, back) for q in maximal_cliques(h)))
    core = f
    for q in cliques:
        core &= q
    if not core:
        pair = next(((a, b) for a, b in combinations(cliques, 2) if not a & b), None)
        if pair is None:
            pair = (cliques[0], cliques[1])
        raise FlowerRejected(
            f"petal cliques {g.names(pair[0])} and {g.names(pair[1])} leave the core empty", pair
        )
    return Flower(cliques, core)


def _lift(s: VertexSet, back: list[int]) -> VertexSet:
    return to_set(back[i] for i in members(s))


class RayKind(enum.Enum):
    INTERSECTING = "intersecting"
    SPLIT = "split"
    OTHER = "other"


@dataclass(frozen=True)
class RayClass:
    kind: RayKind
    petal: int | None = None

    def __str__(self) -> str:
        return f"split:{self.petal}" if self.kind is RayKind.SPLIT else self.kind.value


def classify_ray(flower: Flower, nbhd: VertexSet, strict_core: bool = False) -> RayClass:
    """Intersecting when the neighbourhood lies in the core, split on ``P``
    when ``P`` is the only petal clique holding it and it meets both the core
    and ``P`` minus the core.

    ``strict_core`` reads core containment as proper containment; a ray that
    sees the whole core then falls through to the split test.
    """
    c = flower.core
    if is_subset(nbhd, c) and not (strict_core and nbhd == c):
        return RayClass(RayKind.INTERSECTING)
    holders = [i for i, p in enumerate(flower.petal_cliques) if is_subset(nbhd, p)]
    if len(holders) == 1:
        p = flower.petal_cliques[holders[0]]
        if nbhd & c and nbhd & p & ~c:
            return RayClass(RayKind.SPLIT, holders[0])
    return RayClass(RayKind.OTHER)


@dataclass(frozen=True)
class SunSystem:
    """A sun system sitting inside ``graph`` on the vertex set ``F | R``."""

    graph: Graph
    flower_vertices: VertexSet
    rays: VertexSet
    flower: Flower
    ray_kind: dict[int, RayClass] = field(hash=False)

    @property
    def vertices(self) -> VertexSet:
        return self.flower_vertices | self.rays

    @property
    def host(self) -> Graph:
        return self.graph.induced(self.vertices)[0]

    @property
    def is_trivial(self) -> bool:
        return self.flower.is_trivial

    def nbhd(self, r: int) -> VertexSet:
        return self.graph.adj[r] & self.flower_vertices

    def split_petals(self) -> list[int]:
        return sorted({k.petal for k in self.ray_kind.values() if k.kind is RayKind.SPLIT})


def _sun_system_or_reason(
    g: Graph, f: VertexSet, r: VertexSet, strict_core: bool = False
) -> SunSystem | str:
    if not f or not r:
        return "flower vertices and rays must both be nonempty"
    if f & r:
        return "flower vertices and rays overlap"
    if r.bit_count() < 3:
        return "fewer than three rays"
    if not g.is_independent(r):
        return "rays are not independent"
    nb = {x: g.adj[x] & f for x in members(r)}
    for x, s in nb.items():
        if not s:
            return f"ray {g.name(x)} has no neighbour in the flower"
    for (a, sa), (b, sb) in combinations(nb.items(), 2):
        if not incomparable(sa, sb):
            return f"neighbourhoods of rays {g.name(a)} and {g.name(b)} are nested"
    try:
        flower = try_flower(g, f)
    except FlowerRejected as exc:
        return f"not a flower: {exc}"
    kinds = {}
    for x, s in nb.items():
        kind = classify_ray(flower, s, strict_core)
        if kind.kind is RayKind.OTHER:
            return f"ray {g.name(x)} is neither intersecting nor split"
        kinds[x] = kind
    host, back = g.induced(f | r)
    if not is_asteroidal_set(host, to_set(back.index(x) for x in members(r))):
        return "rays are not asteroidal in the sun system"
    return SunSystem(g, f, r, flower, kinds)


def is_sun_system(g: Graph, f: VertexSet, r: VertexSet, strict_core: bool = False) -> SunSystem:
    """Validate ``G[F | R]`` as a sun system; raises :class:`SunSystemRejected`."""
    out = _sun_system_or_reason(g, f, r, strict_core)
    if isinstance(out, str):
        raise SunSystemRejected(out)
    for x in members(r):
        closed = g.adj[x] & out.vertices | bit(x)
        assert g.is_clique(closed) and not g.common_neighbors(closed) & out.vertices
    return out


# --- auxiliary graph --------------------------------------------------------


@dataclass(frozen=True)
class AuxNode:
    kind: str  # "ray" or "petal"
    ref: int  # ray vertex id, or petal clique index

    def label(self, g: Graph) -> str:
        return f"ray {g.name(self.ref)}" if self.kind == "ray" else f"petal {self.ref}"


@dataclass(frozen=True)
class AuxEdge:
    a: int
    b: int
    reason: str  # "core", "split" or "petals"
    witness: int | None = None  # shared core vertex for "core" edges


@dataclass(frozen=True)
class AuxiliaryGraph:
    nodes: tuple[AuxNode, ...]
    edges: tuple[AuxEdge, ...]

    def neighbors(self, i: int) -> list[int]:
        return sorted({e.b if e.a == i else e.a for e in self.edges if i in (e.a, e.b)})

    def edge(self, i: int, j: int) -> AuxEdge | None:
        for e in self.edges:
            if {e.a, e.b} == {i, j}:
                return e
        return None


def build_auxiliary_graph(ss: SunSystem) -> AuxiliaryGraph:
    rays = list(members(ss.rays))
    nodes = [AuxNode("ray", x) for x in rays] + [AuxNode("petal", p) for p in ss.split_petals()]
    index = {(n.kind, n.ref): i for i, n in enumerate(nodes)}
    edges = []
    core = ss.flower.core
    for a, b in combinations(rays, 2):
        shared = ss.nbhd(a) & ss.nbhd(b) & core
        if shared:
            edges.append(AuxEdge(index["ray", a], index["ray", b], "core", next(members(shared))))
    for x in rays:
        kind = ss.ray_kind[x]
        if kind.kind is RayKind.SPLIT:
            edges.append(AuxEdge(index["ray", x], index["petal", kind.petal], "split"))
    for p, q in combinations(ss.split_petals(), 2):
        edges.append(AuxEdge(index["petal", p], index["petal", q], "petals"))
    return AuxiliaryGraph(tuple(nodes), tuple(edges))


def is_bipartite(aux: AuxiliaryGraph) -> tuple[bool, list[int] | None]:
    """Two-colour by BFS; on failure return an odd cycle of node indices."""
    k = len(aux.nodes)
    adj = [aux.neighbors(i) for i in range(k)]
    colour = [-1] * k
    parent = [-1] * k
    depth = [0] * k
    for s in range(k):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False, _odd_cycle(v, w, parent, depth)
    return True, None


def _odd_cycle(v: int, w: int, parent: list[int], depth: list[int]) -> list[int]:
    # climb both BFS branches to their common ancestor
    left, right = [v], [w]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    cycle = left + right[-2::-1]
    assert len(cycle) % 2 == 1
    return cycle


# --- search -----------------------------------------------------------------


@dataclass(frozen=True)
class BadSunSystem:
    sun_system: SunSystem
    aux: AuxiliaryGraph
    cycle: tuple[int, ...]


def _ray_candidates(g: Graph) -> list[VertexSet]:
    """Independent sets of size >= 3 all of whose triples are asteroidal in
    ``G``. Asteroidality in an induced subgraph implies it in ``G``, so every
    ray set of a sun system inside ``G`` is among these."""
    triples = {to_set(t) for t in find_asteroidal_triples(g)}
    out = []
    verts = sorted({v for t in triples for v in members(t)})
    for size in range(3, len(verts) + 1):
        for combo in combinations(verts, size):
            s = to_set(combo)
            if all(to_set(t) in triples for t in combinations(combo, 3)):
                out.append(s)
    return out


def _rays_fit(g: Graph, f: VertexSet, r: VertexSet) -> bool:
    # cheap filters: each ray sees a nonempty clique of F, pairwise incomparable
    seen = []
    for x in members(r):
        s = g.adj[x] & f
        if not s or not g.is_clique(s):
            return False
        if any(not incomparable(s, o) for o in seen):
            return False
        seen.append(s)
    return True


def find_bad_sun_system(g: Graph, strict_core: bool = False) -> BadSunSystem | None:
    """Smallest induced non-trivial sun system whose auxiliary graph is not
    bipartite, or ``None``.

    Candidates are ordered by ``|F | R|``, then by the sorted vertex tuple,
    then by the sorted ray tuple; the first one found is returned.
    """
    if g.n > MAX_SEARCH_N:
        raise UnsupportedSize(f"sun-system search supports n <= {MAX_SEARCH_N}, got {g.n}")
    require_chordal(g)
    ray_sets = _ray_candidates(g)
    for total in range(6, g.n + 1):
        best: tuple[tuple[int, ...], tuple[int, ...], BadSunSystem] | None = None
        for r in ray_sets:
            nr = r.bit_count()
            if nr > total - 2:
                continue
            rest = [v for v in range(g.n) if not r >> v & 1]
            for combo in combinations(rest, total - nr):
                f = to_set(combo)
                if not _rays_fit(g, f, r):
                    continue
                key = (tuple(members(f | r)), tuple(members(r)))
                if best is not None and key >= best[:2]:
                    continue
                found = _bad_at(g, f, r, strict_core)
                if found is not None:
                    best = (*key, found)
        if best is not None:
            return best[2]
    return None


def _bad_at(g: Graph, f: VertexSet, r: VertexSet, strict_core: bool) -> BadSunSystem | None:
    ss = _sun_system_or_reason(g, f, r, strict_core)
    if isinstance(ss, str) or ss.is_trivial:
        return None
    aux = build_auxiliary_graph(ss)
    ok, cycle = is_bipartite(aux)
    if ok:
        return None
    return BadSunSystem(ss, aux, tuple(cycle))


def has_asteroidal_triple_in_neighborhood(g: Graph) -> tuple[int, tuple[int, int, int]] | None:
    """A vertex ``x`` and an asteroidal triple of ``G`` inside ``N(x)``.

    Such a graph is never a path graph; the sun-system search alone misses
    some of these (for example a net plus a universal vertex).
    """
    for t in find_asteroidal_triples(g):
        common = g.common_neighbors(to_set(t))
        if common:
            return next(members(common)), t
    return None


@dataclass(frozen=True)
class PathVerdict:
    member: bool
    cycle: list[int] | None = None
    bad_sun_system: BadSunSystem | None = None
    neighborhood_triple: tuple[int, tuple[int, int, int]] | None = None


def is_path_graph_via_theorem(g: Graph, neighborhood_rule: bool = True, strict_core: bool = False) -> PathVerdict:
    """Chordal and free of induced non-trivial sun systems with a
    non-bipartite auxiliary graph.

    With ``neighborhood_rule`` (the default) a graph with an asteroidal triple
    inside one neighbourhood is also rejected; without it the sun-system
    condition is applied on its own.
    """
    from .chordal import is_chordal

    chordal, cyc = is_chordal(g)
    if not chordal:
        return PathVerdict(False, cycle=cyc)
    bad = find_bad_sun_system(g, strict_core)
    if bad is not None:
        return PathVerdict(False, bad_sun_system=bad)
    if neighborhood_rule:
        hit = has_asteroidal_triple_in_neighborhood(g)
        if hit is not None:
            return PathVerdict(False, neighborhood_triple=hit)
    return PathVerdict(True)


def sun_systems_on(g: Graph) -> list[SunSystem]:
    """Every non-trivial sun system whose vertex set is all of ``G``."""
    out = []
    for r in _ray_candidates(g):
        ss = _sun_system_or_reason(g, g.vertices & ~r, r)
        if not isinstance(ss, str) and not ss.is_trivial:
            out.append(ss)
    return out
