"""Witnesses of non-membership and their re-verification.

Every certificate is checked by routines that avoid the code paths used to
find it: components come from a separate BFS, isomorphism from plain
backtracking instead of canonical codes, and flower cliques from
Bron-Kerbosch instead of an elimination order.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from itertools import combinations

from .chordal import is_chordal, maximal_cliques_general
from .graph import Graph, UnsupportedSize, VertexSet, members, to_set

CLASSES = ("chordal", "interval", "directed-path", "path")


class CertificateError(ValueError):
    """A certificate failed re-verification."""


class Kind(enum.Enum):
    INDUCED_CYCLE = "InducedCycle"
    ASTEROIDAL = "AsteroidalWitness"
    ODD_SUN = "OddSunWitness"
    BAD_SUN_SYSTEM = "BadSunSystem"
    EXHAUSTION = "OracleExhaustion"


@dataclass(frozen=True)
class Certificate:
    kind: Kind
    graph: Graph = field(repr=False)
    payload: dict

    def verify(self) -> None:
        try:
            _VERIFIERS[self.kind](self.graph, self.payload)
        except CertificateError:
            raise
        except (IndexError, KeyError, TypeError, ValueError) as exc:
            raise CertificateError(f"malformed payload: {exc!r}") from exc

    def to_record(self) -> dict:
        return {"kind": self.kind.value, **self.payload}

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)

    def to_text(self) -> str:
        g, p = self.graph, self.payload
        name = lambda vs: "{" + ",".join(g.name(v) for v in vs) + "}"
        if self.kind is Kind.INDUCED_CYCLE:
            return f"induced cycle of length {len(p['cycle'])}: " + " - ".join(g.name(v) for v in p["cycle"])
        if self.kind is Kind.ASTEROIDAL:
            out = f"asteroidal triple {name(p['triple'])}"
            if p.get("center") is not None:
                out += f" inside the neighbourhood of {g.name(p['center'])}"
            for (a, b), w in zip(combinations(p["triple"], 2), p.get("connections") or []):
                out += f"\n  {g.name(a)}~{g.name(b)} specially connected through {name(w)}"
            return out
        if self.kind is Kind.ODD_SUN:
            return f"induced {p['k']}-sun on {name(p['vertices'])}"
        if self.kind is Kind.EXHAUSTION:
            return (
                f"no clique-path tree among {p['trees_examined']} candidate trees "
                f"on {p['cliques']} maximal cliques"
            )
        lines = [
            f"bad sun system: F={name(p['flower'])} R={name(p['rays'])} core={name(p['core'])}",
            "  petal cliques: " + " ".join(name(q) for q in p["petal_cliques"]),
            "  rays: " + " ".join(f"{g.name(int(r))}:{k}" for r, k in p["ray_kinds"].items()),
            f"  odd cycle of length {len(p['cycle'])} in the auxiliary graph:",
        ]
        for e in p["cycle_edges"]:
            why = {"core": f"share core vertex {g.name(e['witness'])}" if e.get("witness") is not None else "",
                   "split": "ray split on petal", "petals": "petal vertices"}[e["reason"]]
            lines.append(f"    {_node_text(g, e['a'])} -- {_node_text(g, e['b'])}: {why}")
        return "\n".join(lines)


def _node_text(g: Graph, node: list) -> str:
    kind, ref = node
    return f"ray {g.name(ref)}" if kind == "ray" else f"petal {ref}"


# --- independent checks ---------------------------------------------------------


def _nbrs(g: Graph, v: int) -> set[int]:
    return {w for w in range(g.n) if g.adj[v] >> w & 1}


def _reachable(g: Graph, start: int, blocked: set[int]) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in _nbrs(g, v):
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return seen


def _check_asteroidal(g: Graph, vs: list[int]) -> None:
    if len(set(vs)) != len(vs) or len(vs) < 3:
        raise CertificateError("asteroidal set needs at least three distinct vertices")
    for a, b in combinations(vs, 2):
        if g.has_edge(a, b):
            raise CertificateError(f"{g.name(a)} and {g.name(b)} are adjacent")
    for v in vs:
        blocked = _nbrs(g, v) | {v}
        rest = [w for w in vs if w != v]
        reach = _reachable(g, rest[0], blocked)
        if any(w not in reach for w in rest):
            raise CertificateError(f"removing N[{g.name(v)}] separates the other vertices")


def _sub(g: Graph, vs: list[int]) -> list[set[int]]:
    pos = {v: i for i, v in enumerate(vs)}
    return [{pos[w] for w in _nbrs(g, v) if w in pos} for v in vs]


def isomorphic_pointed(g: Graph, h: Graph, pins: tuple[tuple[int, int], ...] = ()) -> bool:
    """Backtracking isomorphism test; ``pins`` forces ``g`` vertex to ``h`` vertex."""
    if g.n != h.n or g.m != h.m:
        return False
    ga, ha = _sub(g, list(range(g.n))), _sub(h, list(range(h.n)))
    if sorted(map(len, ga)) != sorted(map(len, ha)):
        return False
    fixed = dict(pins)
    order = [v for v, _ in pins] + sorted((v for v in range(g.n) if v not in fixed), key=lambda v: -len(ga[v]))
    image: dict[int, int] = {}
    used: set[int] = set()

    def fits(v: int, w: int) -> bool:
        if len(ga[v]) != len(ha[w]) or w in used:
            return False
        return all((u in ga[v]) == (image[u] in ha[w]) for u in image)

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        options = [fixed[v]] if v in fixed else range(h.n)
        for w in options:
            if fits(v, w):
                image[v] = w
                used.add(w)
                if rec(i + 1):
                    return True
                del image[v]
                used.discard(w)
        return False

    return rec(0)


def _verify_cycle(g: Graph, p: dict) -> None:
    cyc = p["cycle"]
    k = len(cyc)
    if k < 4 or len(set(cyc)) != k:
        raise CertificateError("cycle must have at least four distinct vertices")
    for i, v in enumerate(cyc):
        for j, w in enumerate(cyc):
            adjacent = (i - j) % k in (1, k - 1)
            if i != j and g.has_edge(v, w) != adjacent:
                raise CertificateError(f"cycle is not induced at {g.name(v)}-{g.name(w)}")


def _verify_asteroidal(g: Graph, p: dict) -> None:
    triple = p["triple"]
    _check_asteroidal(g, triple)
    center = p.get("center")
    if center is not None and any(not g.has_edge(center, t) for t in triple):
        raise CertificateError("triple is not inside the neighbourhood of the center")
    conns = p.get("connections")
    if conns is not None:
        from .families import s_directed_family

        family = s_directed_family(g.n)
        for (a, b), w in zip(combinations(triple, 2), conns, strict=True):
            if a not in w or b not in w:
                raise CertificateError("connection witness misses an endpoint")
            h = g.induced(to_set(w))[0]
            ia, ib = w.index(a), w.index(b)
            if not any(
                isomorphic_pointed(h, f.graph, ((ia, f.u), (ib, f.v))) for f in family if f.graph.n == h.n
            ):
                raise CertificateError(f"{g.name(a)}, {g.name(b)} witness matches no connection shape")


def _verify_odd_sun(g: Graph, p: dict) -> None:
    from .families import k_sun

    k, vs = p["k"], p["vertices"]
    if k % 2 == 0 or k < 3 or len(vs) != 2 * k:
        raise CertificateError("odd sun witness must have 2k vertices with k odd")
    if not isomorphic_pointed(g.induced(to_set(vs))[0], k_sun(k)):
        raise CertificateError(f"vertices do not induce a {k}-sun")


def _verify_exhaustion(g: Graph, p: dict) -> None:
    from .cliquetree import is_path_graph_oracle

    if not is_chordal(g)[0]:
        raise CertificateError("exhaustion certificates are for chordal graphs")
    if is_path_graph_oracle(g, prune=False).member:
        raise CertificateError("unpruned search finds a clique-path tree")


def _verify_bad_sun_system(g: Graph, p: dict) -> None:
    f, rays, core = set(p["flower"]), list(p["rays"]), set(p["core"])
    if f & set(rays):
        raise CertificateError("flower and rays overlap")
    _check_asteroidal(g.induced(to_set(f | set(rays)))[0], [sorted(f | set(rays)).index(r) for r in rays])
    sub = sorted(f)
    cliques = [{sub[i] for i in range(len(sub)) if q >> i & 1} for q in maximal_cliques_general(g.induced(to_set(f))[0])]
    claimed = [set(q) for q in p["petal_cliques"]]
    if sorted(map(sorted, cliques)) != sorted(map(sorted, claimed)):
        raise CertificateError("petal cliques are not the maximal cliques of the flower")
    if len(claimed) < 2:
        raise CertificateError("flower is trivial")
    if set.intersection(*claimed) != core or not core:
        raise CertificateError("core is not the common intersection of the petal cliques")
    nb = {r: _nbrs(g, r) & f for r in rays}
    for a, b in combinations(rays, 2):
        if nb[a] <= nb[b] or nb[b] <= nb[a]:
            raise CertificateError("ray neighbourhoods are nested")
    kinds = {int(r): k for r, k in p["ray_kinds"].items()}
    for r in rays:
        kind = kinds[r]
        if kind == "intersecting":
            if not nb[r] <= core:
                raise CertificateError(f"ray {g.name(r)} is not intersecting")
        else:
            petal = claimed[int(kind.split(":")[1])]
            holders = [q for q in claimed if nb[r] <= q]
            if holders != [petal] or not nb[r] & core or not nb[r] & (petal - core):
                raise CertificateError(f"ray {g.name(r)} is not split on its petal")
    cyc = [tuple(n) for n in p["cycle"]]
    if len(cyc) % 2 == 0 or len(set(cyc)) != len(cyc):
        raise CertificateError("cycle is not an odd cycle of distinct nodes")
    edges = p["cycle_edges"]
    if len(edges) != len(cyc):
        raise CertificateError("cycle edge count does not match its length")
    for i, e in enumerate(edges):
        a, b = tuple(e["a"]), tuple(e["b"])
        if {a, b} != {cyc[i], cyc[(i + 1) % len(cyc)]}:
            raise CertificateError("cycle edges do not follow the cycle")
        if e["reason"] == "core":
            w = e["witness"]
            if a[0] != "ray" or b[0] != "ray" or w not in nb[a[1]] & nb[b[1]] & core:
                raise CertificateError("ray-ray edge lacks a shared core vertex")
        elif e["reason"] == "split":
            ray, pet = (a, b) if a[0] == "ray" else (b, a)
            if ray[0] != "ray" or pet[0] != "petal" or kinds[ray[1]] != f"split:{pet[1]}":
                raise CertificateError("ray-petal edge without the split relation")
        elif e["reason"] == "petals":
            if a[0] != "petal" or b[0] != "petal":
                raise CertificateError("petal edge between non-petal nodes")
            for node in (a, b):
                if f"split:{node[1]}" not in kinds.values():
                    raise CertificateError("petal node without a split ray")
        else:
            raise CertificateError(f"unknown edge reason {e['reason']!r}")


_VERIFIERS = {
    Kind.INDUCED_CYCLE: _verify_cycle,
    Kind.ASTEROIDAL: _verify_asteroidal,
    Kind.ODD_SUN: _verify_odd_sun,
    Kind.BAD_SUN_SYSTEM: _verify_bad_sun_system,
    Kind.EXHAUSTION: _verify_exhaustion,
}


# --- construction -----------------------------------------------------------------


def _ids(s: VertexSet) -> list[int]:
    return list(members(s))


def bad_sun_system_certificate(g: Graph, bad) -> Certificate:
    ss, aux = bad.sun_system, bad.aux
    node = lambda i: [aux.nodes[i].kind, aux.nodes[i].ref]
    cyc = list(bad.cycle)
    edges = []
    for i, a in enumerate(cyc):
        b = cyc[(i + 1) % len(cyc)]
        e = aux.edge(a, b)
        edges.append({"a": node(a), "b": node(b), "reason": e.reason, "witness": e.witness})
    payload = {
        "flower": _ids(ss.flower_vertices),
        "rays": _ids(ss.rays),
        "core": _ids(ss.flower.core),
        "petal_cliques": [_ids(q) for q in ss.flower.petal_cliques],
        "ray_kinds": {str(r): str(k) for r, k in sorted(ss.ray_kind.items())},
        "cycle": [node(i) for i in cyc],
        "cycle_edges": edges,
    }
    return Certificate(Kind.BAD_SUN_SYSTEM, g, payload)


def certify(g: Graph, cls: str) -> Certificate | None:
    """Non-membership certificate for ``cls``, re-verified, or ``None`` for
    members."""
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    cert = _find(g, cls)
    if cert is not None:
        cert.verify()
    return cert


def _find(g: Graph, cls: str) -> Certificate | None:
    from .asteroidal import contains_induced_odd_sun, find_asteroidal_triples, find_special_asteroidal_triple
    from .cliquetree import is_path_graph_oracle
    from .sunsystem import is_path_graph_via_theorem

    chordal, cyc = is_chordal(g)
    if not chordal:
        return Certificate(Kind.INDUCED_CYCLE, g, {"cycle": list(cyc)})
    if cls == "chordal":
        return None
    if cls == "interval":
        ats = find_asteroidal_triples(g)
        return Certificate(Kind.ASTEROIDAL, g, {"triple": list(ats[0])}) if ats else None
    if cls == "directed-path":
        found, s = contains_induced_odd_sun(g)
        if found:
            return Certificate(Kind.ODD_SUN, g, {"k": s.bit_count() // 2, "vertices": _ids(s)})
        hit = find_special_asteroidal_triple(g)
        if hit is None:
            return None
        triple, witnesses = hit
        return Certificate(Kind.ASTEROIDAL, g, {"triple": list(triple), "connections": [_ids(w) for w in witnesses]})
    verdict = is_path_graph_via_theorem(g)
    if verdict.bad_sun_system is not None:
        return bad_sun_system_certificate(g, verdict.bad_sun_system)
    if verdict.neighborhood_triple is not None:
        x, t = verdict.neighborhood_triple
        return Certificate(Kind.ASTEROIDAL, g, {"triple": list(t), "center": x})
    try:
        oracle = is_path_graph_oracle(g)
    except UnsupportedSize:
        return None
    if oracle.member:
        return None
    from .chordal import maximal_cliques

    return Certificate(
        Kind.EXHAUSTION, g, {"cliques": len(maximal_cliques(g)), "trees_examined": oracle.trees_examined}
    )
