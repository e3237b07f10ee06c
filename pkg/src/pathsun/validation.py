"""Property suites shared by the ``validate`` command and the test suite.

Each suite returns :class:`Check` records: how many cases were examined and
the witnesses of any violation.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from itertools import combinations

from .asteroidal import contains_induced_odd_sun, find_asteroidal_triples, is_directed_path, is_interval
from .certificates import CLASSES as CERT_CLASSES
from .certificates import CertificateError, certify
from .chordal import maximal_cliques
from .cliquetree import enumerate_clique_trees, is_interval_oracle, is_path_graph_oracle
from .families import (
    NoPathwiseTree,
    build_TA,
    chordal_corpus,
    f11_4k,
    f11_8,
    g1,
    g2,
    g3,
    pathwise_on,
    random_chordal,
)
from .graph import Graph, canonical_code, cycle, from_edge_list, members, to_graph6, to_set
from .recognize import memberships
from .sunsystem import RayKind, SunSystem, find_bad_sun_system, is_path_graph_via_theorem, is_sun_system, sun_systems_on

HIERARCHY_WITNESSES = {
    "g1": (g1, (False, True, True, True)),
    "g2": (g2, (False, False, True, True)),
    "g3": (g3, (False, False, False, True)),
}


@dataclass
class Check:
    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, witness: str) -> None:
        self.violations.append(witness)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "".join(f"; {n}" for n in self.notes)
        return f"{status} {self.name}: {self.checked} checked, {len(self.violations)} violations{extra}"


# --- hierarchy ---------------------------------------------------------------


def check_hierarchy_witnesses() -> Check:
    out = Check("hierarchy-witnesses")
    for name, (make, expected) in HIERARCHY_WITNESSES.items():
        got = memberships(make(), "both")
        out.checked += 1
        if got != expected:
            out.fail(f"{name}: expected {expected}, got {got}")
    return out


def check_interval_double(corpus: list[Graph]) -> Check:
    out = Check("interval-characterization")
    for g in corpus:
        out.checked += 1
        if is_interval(g) != is_interval_oracle(g):
            out.fail(f"{to_graph6(g)}: asteroidal-triple test {is_interval(g)}, clique order {is_interval_oracle(g)}")
    return out


def check_directed_double(corpus: list[Graph]) -> Check:
    out = Check("directed-path-characterization")
    for g in corpus:
        out.checked += 1
        left = is_directed_path(g)
        right = is_path_graph_oracle(g).member and not contains_induced_odd_sun(g)[0]
        if left != right:
            out.fail(f"{to_graph6(g)}: special triples {left}, path without odd sun {right}")
    return out


def check_chain(corpus: list[Graph]) -> Check:
    out = Check("class-chain")
    for g in corpus:
        out.checked += 1
        flags = memberships(g, "characterization")
        if any(a and not b for a, b in zip(flags, flags[1:])):
            out.fail(f"{to_graph6(g)}: (interval, directed, path, chordal) = {flags}")
    return out


def suite_hierarchy(n_max: int = 7) -> list[Check]:
    corpus = chordal_corpus(n_max)
    return [check_hierarchy_witnesses(), check_interval_double(corpus), check_directed_double(corpus), check_chain(corpus)]


# --- sun-system test vs oracle ---------------------------------------------------


def check_path_agreement_corpus(corpus: list[Graph]) -> Check:
    out = Check("sun-system-test-vs-oracle-corpus")
    for g in corpus:
        out.checked += 1
        verdict = is_path_graph_via_theorem(g).member
        if verdict != is_path_graph_oracle(g).member:
            out.fail(f"{to_graph6(g)}: sun-system test {verdict}, oracle {not verdict}")
    return out


def check_path_agreement_random(samples: int, seed: int, n: int = 10, budget: int = 5, cap_cliques: int = 12) -> Check:
    out = Check(f"sun-system-test-vs-oracle-random-n{n}")
    skipped = 0
    for i in range(samples):
        g = random_chordal(n, budget, seed + i)
        if len(maximal_cliques(g)) > cap_cliques:
            skipped += 1
            continue
        out.checked += 1
        verdict = is_path_graph_via_theorem(g).member
        if verdict != is_path_graph_oracle(g, max_cliques=cap_cliques).member:
            out.fail(f"seed {seed + i} {to_graph6(g)}: sun-system test {verdict}, oracle {not verdict}")
    frac = skipped / samples if samples else 0.0
    out.notes.append(f"skipped {skipped}/{samples} ({frac:.1%}) over {cap_cliques} cliques")
    if frac >= 0.2:
        out.fail(f"skipped fraction {frac:.1%} is not below 20%")
    return out


def suite_path_agreement(n_max: int = 7, samples: int = 0, seed: int = 0) -> list[Check]:
    """Corpus agreement, plus a seeded random batch at n = 10 when ``samples`` is set."""
    out = [check_path_agreement_corpus(chordal_corpus(n_max))]
    if samples:
        out.append(check_path_agreement_random(samples, seed))
    return out


# --- structural properties ---------------------------------------------------


def check_three_leaves(corpus: list[Graph]) -> Check:
    """The Steiner subtree of an asteroidal triple has exactly three leaves,
    one per triple vertex, in every clique tree."""
    out = Check("asteroidal-triple-leaves")
    hosts = 0
    for g in corpus:
        triples = find_asteroidal_triples(g)
        if not triples:
            continue
        hosts += 1
        trees = enumerate_clique_trees(g).trees
        for t in triples:
            s = to_set(t)
            for tree in trees:
                out.checked += 1
                view = tree.steiner_subtree(s)
                leaves = view.leaves()
                hit = [tree.cliques[i] & s for i in leaves]
                if len(leaves) != 3 or any(h.bit_count() != 1 for h in hit) or len(set(hit)) != 3:
                    out.fail(f"{to_graph6(g)} triple {t} tree {tree.edges}: leaves {leaves}")
    out.notes.append(f"{hosts} graphs with a triple")
    return out


def check_neighborhood_triples(corpus: list[Graph]) -> Check:
    out = Check("triple-in-neighbourhood-not-path")
    for g in corpus:
        for t in find_asteroidal_triples(g):
            if g.common_neighbors(to_set(t)):
                out.checked += 1
                if is_path_graph_oracle(g).member:
                    out.fail(f"{to_graph6(g)}: triple {t} inside a neighbourhood, yet a path graph")
                break
    return out


def split_ray_instances(n_max: int = 8) -> list[SunSystem]:
    """Whole-graph sun systems with a split ray whose graph is a path graph."""
    out = []
    for g in chordal_corpus(n_max, n_min=6):
        systems = [ss for ss in sun_systems_on(g) if ss.split_petals()]
        if systems and is_path_graph_oracle(g).member:
            out.extend(systems)
    return out


def split_flower(petals: int, wide: bool = False) -> SunSystem:
    """Core clique ``c_0..c_{s-1}``, one private vertex ``p_i`` per petal and a
    ray ``r_i`` seeing ``p_i`` and ``c_i`` (and ``c_{i+1}`` when ``wide``)."""
    s = petals
    core, priv, rays = range(s), range(s, 2 * s), range(2 * s, 3 * s)
    edges = [(a, b) for a, b in combinations(core, 2)]
    edges += [(p, c) for p in priv for c in core]
    for i in range(s):
        edges += [(rays[i], priv[i]), (rays[i], core[i])]
        if wide:
            edges.append((rays[i], core[(i + 1) % s]))
    labels = [f"c{i}" for i in core] + [f"p{i}" for i in range(s)] + [f"r{i}" for i in range(s)]
    g = from_edge_list(3 * s, edges, labels)
    return is_sun_system(g, to_set(range(2 * s)), to_set(rays))


def check_split_adjacency(instances: list[SunSystem]) -> Check:
    out = Check("split-ray-adjacent-to-petal")
    graphs = set()
    degenerate = 0
    for ss in instances:
        g = ss.graph
        cl = maximal_cliques(g)
        index = {q: i for i, q in enumerate(cl)}
        trees = enumerate_clique_trees(g).trees
        for r, kind in sorted(ss.ray_kind.items()):
            if kind.kind is not RayKind.SPLIT:
                continue
            petal = ss.flower.petal_cliques[kind.petal]
            if petal not in index:
                # the ray sees the whole petal clique, which is then not a node
                degenerate += 1
                continue
            graphs.add(canonical_code(g))
            edge = tuple(sorted((index[g.adj[r] | 1 << r], index[petal])))
            for tree in trees:
                out.checked += 1
                if edge not in tree.edges:
                    out.fail(f"{to_graph6(g)} ray {g.name(r)}: N[r] not adjacent to its petal in {tree.edges}")
    out.notes.append(f"{len(graphs)} graphs; {degenerate} rays see their whole petal clique")
    if len(graphs) < 20:
        out.fail(f"only {len(graphs)} instances, at least 20 required")
    return out


def check_two_cliques(instances: list[SunSystem]) -> Check:
    out = Check("two-central-cliques")
    for ss in instances:
        g = ss.graph
        cl = maximal_cliques(g)
        central = [i for i, q in enumerate(cl) if ss.flower.core & ~q == 0]
        ray_nodes = [cl.cliques.index(g.adj[r] | 1 << r) for r in members(ss.rays)]
        for tree in enumerate_clique_trees(g).trees:
            if not tree.is_clique_path_tree()[0]:
                continue
            out.checked += 1
            nbrs = [set(tree.neighbors(i)) for i in ray_nodes]
            if not any(all(a in nb or b in nb for nb in nbrs) for a, b in combinations(central, 2)):
                out.fail(f"{to_graph6(g)}: no two core cliques serve every ray in {tree.edges}")
    return out


def check_three_split_petals(instances: list[SunSystem]) -> Check:
    out = Check("three-split-petals-not-path")
    for ss in instances:
        out.checked += 1
        if is_path_graph_oracle(ss.graph).member:
            out.fail(f"{to_graph6(ss.graph)}: {len(ss.split_petals())} split petals, yet a path graph")
    return out


def check_bad_implies_not_path(corpus: list[Graph]) -> Check:
    """Every bad sun system found should sit on a non-path host."""
    out = Check("bad-sun-system-host-not-path")
    for g in corpus:
        bad = find_bad_sun_system(g)
        if bad is None:
            continue
        out.checked += 1
        host = bad.sun_system.host
        if is_path_graph_oracle(host).member:
            out.fail(f"{to_graph6(g)}: bad sun system on {to_graph6(host)} is a path graph")
    return out


def suite_structure(n_max: int = 6) -> list[Check]:
    corpus = chordal_corpus(n_max)
    instances = split_ray_instances()
    many_split = [ss for g in chordal_corpus(8, n_min=6) for ss in sun_systems_on(g) if len(ss.split_petals()) >= 3]
    many_split += [split_flower(s, w) for s in (3, 4) for w in (False, True)]
    return [
        check_three_leaves(corpus),
        check_neighborhood_triples(chordal_corpus(max(n_max, 7))),
        check_split_adjacency(instances),
        check_two_cliques(instances),
        check_three_split_petals(many_split),
        check_bad_implies_not_path(chordal_corpus(8, n_min=6) + [g3(), f11_8(), f11_4k(3)]),
    ]


# --- F11(4k) trees -------------------------------------------------------------


def check_f11_triple_trees(k: int) -> list[Check]:
    g = f11_4k(k)
    trees = Check(f"f11-{4 * k}-triple-trees")
    for t in find_asteroidal_triples(g):
        trees.checked += 1
        try:
            tree = build_TA(g, t)
        except NoPathwiseTree as exc:
            trees.fail(f"triple {g.names(to_set(t))}: {exc}")
            continue
        seen = 0
        for r in t:
            seen |= g.adj[r]
        ok, bad = tree.validate()
        good, where = pathwise_on(tree, seen)
        if not ok or not good:
            trees.fail(f"triple {g.names(to_set(t))}: tree {tree.edges} fails at {bad if not ok else where}")
    oracle = Check(f"f11-{4 * k}-not-path")
    oracle.checked = 1
    if is_path_graph_oracle(g).member:
        oracle.fail(f"f11_4k({k}) has a clique-path tree")
    return [trees, oracle]


def check_reconstruction() -> Check:
    out = Check("f11-reconstruction")
    out.checked += 1
    if canonical_code(f11_4k(2)) != canonical_code(f11_8()):
        out.fail("f11_4k(2) is not isomorphic to f11_8")
    for k in (2, 3, 4):
        out.checked += 1
        count = len(maximal_cliques(f11_4k(k)))
        if count != 2 * k - 1 + 2:
            out.fail(f"f11_4k({k}) has {count} maximal cliques, expected {2 * k + 1}")
    return out


def suite_f11(ks: tuple[int, ...] = (3, 4)) -> list[Check]:
    out = [check_reconstruction()]
    for k in ks:
        out += check_f11_triple_trees(k)
    return out


# --- certificates ------------------------------------------------------------------


def check_certificates(graphs: list[Graph]) -> Check:
    out = Check("certificates-reverify")
    emitted = 0
    for g in graphs:
        for cls in CERT_CLASSES:
            out.checked += 1
            try:
                cert = certify(g, cls)
            except CertificateError as exc:
                out.fail(f"{to_graph6(g)} {cls}: {exc}")
                continue
            emitted += cert is not None
    out.notes.append(f"{emitted} certificates emitted")
    return out


def suite_certificates(n_max: int = 7, samples: int = 100, seed: int = 0) -> list[Check]:
    graphs = chordal_corpus(n_max) + [g1(), g2(), g3(), f11_8(), f11_4k(3), cycle(4), cycle(6)]
    graphs += [random_chordal(10, 5, seed + i) for i in range(samples)]
    return [check_certificates(graphs)]


SUITES: dict[str, Callable[..., list[Check]]] = {
    "hierarchy": suite_hierarchy,
    "theorem": suite_path_agreement,
    "lemmas": suite_structure,
    "prop44": suite_f11,
    "certificates": suite_certificates,
}
