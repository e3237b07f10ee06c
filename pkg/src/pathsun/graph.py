"""Bitset graph representation shared by every recognizer.

Vertices are the integers ``0..n-1`` and vertex sets are plain ``int``
bitmasks, so union, intersection and complement are single word operations.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

MAX_VERTICES = 64
CANONICAL_MAX = 12

VertexSet = int


class GraphError(ValueError):
    """Malformed graph input (bad endpoint, self-loop, unparsable text)."""


class UnsupportedSize(ValueError):
    """An exhaustive routine was asked to run past its size cap."""


def bit(v: int) -> VertexSet:
    return 1 << v


def members(s: VertexSet) -> Iterator[int]:
    """Yield the vertices of ``s`` in increasing order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def to_set(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def size(s: VertexSet) -> int:
    return s.bit_count()


def lowest(s: VertexSet) -> int:
    return (s & -s).bit_length() - 1


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    return a & ~b == 0


def incomparable(a: VertexSet, b: VertexSet) -> bool:
    """Neither set contains the other."""
    return bool(a & ~b) and bool(b & ~a)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighbourhood of ``v`` as a bitmask. Instances are
    immutable; use the constructors below rather than building ``adj`` by hand.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise GraphError(f"self-loop at {v}")
            if nb >> self.n:
                raise GraphError(f"neighbour of {v} out of range")
            for w in members(nb):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency {v}-{w}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("label count does not match n")

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def names(self, s: VertexSet) -> list[str]:
        return [self.name(v) for v in members(s)]

    def neighborhood(self, v: int, closed: bool = False) -> VertexSet:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return self.adj[v] | (1 << v) if closed else self.adj[v]

    def common_neighbors(self, s: VertexSet) -> VertexSet:
        """Vertices adjacent to every member of ``s``."""
        out = self.vertices
        for v in members(s):
            out &= self.adj[v]
        return out

    def is_clique(self, s: VertexSet) -> bool:
        return all(is_subset(s & ~bit(v), self.adj[v]) for v in members(s))

    def is_independent(self, s: VertexSet) -> bool:
        return all(not (self.adj[v] & s) for v in members(s))

    def edge_count_within(self, s: VertexSet) -> int:
        return sum((self.adj[v] & s).bit_count() for v in members(s)) // 2

    def component_of(self, v: int, within: VertexSet) -> VertexSet:
        """Vertices reachable from ``v`` using only vertices of ``within``."""
        seen = bit(v)
        frontier = seen
        while frontier:
            nxt = 0
            for w in members(frontier):
                nxt |= self.adj[w]
            nxt &= within & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def components_avoiding(self, removed: VertexSet = 0) -> list[VertexSet]:
        """Connected components of ``G - removed``, ordered by least vertex."""
        rest = self.vertices & ~removed
        parts = []
        while rest:
            comp = self.component_of(lowest(rest), rest)
            parts.append(comp)
            rest &= ~comp
        return parts

    def is_connected(self) -> bool:
        return len(self.components_avoiding()) <= 1

    def induced(self, s: VertexSet) -> tuple[Graph, tuple[int, ...]]:
        """Subgraph induced on ``s`` plus the map from new ids to parent ids."""
        back = tuple(members(s))
        index = {v: i for i, v in enumerate(back)}
        adj = []
        for v in back:
            adj.append(to_set(index[w] for w in members(self.adj[v] & s)))
        labels = tuple(self.name(v) for v in back) if self.labels else None
        return Graph(len(back), tuple(adj), labels), back

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph where old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = to_set(perm[w] for w in members(self.adj[v]))
        return Graph(self.n, tuple(adj))

    def add_vertex(self, neighbors: VertexSet) -> Graph:
        """Append vertex ``n`` adjacent to ``neighbors``."""
        adj = [nb | (bit(self.n) if neighbors >> v & 1 else 0) for v, nb in enumerate(self.adj)]
        adj.append(neighbors)
        return Graph(self.n + 1, tuple(adj))


def from_edge_list(
    n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        adj[u] |= bit(v)
        adj[v] |= bit(u)
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def from_named_edges(names: str | Sequence[str], edges: Iterable[str]) -> Graph:
    """Build a graph from single-character names, e.g. ``("abc", ["ab", "bc"])``."""
    names = list(names)
    index = {name: i for i, name in enumerate(names)}
    return from_edge_list(len(names), [(index[e[0]], index[e[1]]) for e in edges], names)


def complete(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


# --- graph6 ---------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError("graph6 order too large")


def to_graph6(g: Graph) -> str:
    bits = [g.has_edge(i, j) for j in range(g.n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = "".join(
        chr(63 + sum(b << (5 - k) for k, b in enumerate(bits[i : i + 6])))
        for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is allowed)."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphError("graph6: empty input at byte 0")
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"graph6: invalid byte {ch!r} at offset {i}")
    if data[0] == "~":
        if len(data) < 4 or data[1] == "~":
            raise GraphError("graph6: unsupported or truncated size header at byte 1")
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    else:
        n = ord(data[0]) - 63
        pos = 1
    if n > MAX_VERTICES:
        raise GraphError(f"graph6: {n} vertices exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise GraphError(
            f"graph6: expected {need} data bytes for n={n}, got {len(body)} "
            f"(at byte {pos + min(len(body), need)})"
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= bit(j)
                adj[j] |= bit(i)
            k += 1
    return Graph(n, tuple(adj))


# --- edge-list text ---------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines; ``#`` starts a comment.

    Endpoints may be integers or names; names are assigned ids in order of
    first appearance (and must then number at most ``count``).
    """
    n = None
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: expected header 'n <count>'")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        pairs.append((parts[0], parts[1]))
    if n is None:
        raise GraphError("edge list: missing 'n <count>' header")
    if all(a.isdigit() and b.isdigit() for a, b in pairs):
        return from_edge_list(n, [(int(a), int(b)) for a, b in pairs])
    names: dict[str, int] = {}
    for a, b in pairs:
        for x in (a, b):
            names.setdefault(x, len(names))
    if len(names) > n:
        raise GraphError(f"edge list names {len(names)} vertices but header says {n}")
    labels = list(names) + [str(i) for i in range(len(names), n)]
    return from_edge_list(n, [(names[a], names[b]) for a, b in pairs], labels)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{g.name(u)} {g.name(v)}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def format_dot(g: Graph, name: str = "G", marked: Sequence[int] = ()) -> str:
    """Graphviz text; ``marked`` vertices are drawn as double circles."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        shape = ", shape=doublecircle" if v in marked else ""
        lines.append(f'  v{v} [label="{g.name(v)}"{shape}];')
    lines += [f"  v{u} -- v{v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- canonical form ---------------------------------------------------------


def _refine(g: Graph, cells: list[VertexSet]) -> list[VertexSet]:
    """Equitable refinement of an ordered partition; label-independent."""
    changed = True
    while changed:
        changed = False
        out = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            sig: dict[tuple[int, ...], int] = {}
            for v in members(cell):
                key = tuple((g.adj[v] & c).bit_count() for c in cells)
                sig[key] = sig.get(key, 0) | bit(v)
            if len(sig) > 1:
                changed = True
            out.extend(sig[k] for k in sorted(sig))
        cells = out
    return cells


def _twin_classes(g: Graph, cell: VertexSet) -> list[int]:
    """One representative per class of interchangeable (twin) vertices in ``cell``."""
    reps: list[int] = []
    for v in members(cell):
        for w in reps:
            if g.adj[v] & ~bit(w) == g.adj[w] & ~bit(v):
                break
        else:
            reps.append(v)
    return reps


def canonical_code(
    g: Graph, pinned: Sequence[int] = (), cap: int = CANONICAL_MAX
) -> str:
    """Isomorphism-invariant code: equal codes iff the graphs are isomorphic.

    ``pinned`` vertices are individualized first, in order, so pointed graphs
    ``(G, u, v)`` can be compared with ``pinned=(u, v)``.
    """
    if g.n > cap:
        raise UnsupportedSize(f"canonical_code supports n <= {cap}, got {g.n}")
    cells: list[VertexSet] = [bit(v) for v in pinned]
    rest = g.vertices & ~to_set(pinned)
    if rest:
        cells.append(rest)
    best: list[str] = []

    def search(part: list[VertexSet]) -> None:
        part = _refine(g, part)
        idx = next((i for i, c in enumerate(part) if c & (c - 1)), None)
        if idx is None:
            perm = [0] * g.n
            for pos, c in enumerate(part):
                perm[lowest(c)] = pos
            code = to_graph6(g.relabel(perm))
            if not best or code > best[0]:
                best[:] = [code]
            return
        cell = part[idx]
        for v in _twin_classes(g, cell):
            search(part[:idx] + [bit(v), cell & ~bit(v)] + part[idx + 1 :])

    search(cells)
    prefix = ",".join(str(p) for p in range(len(pinned)))
    return f"{prefix}|{best[0]}" if pinned else best[0]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_code(g) == canonical_code(h)
