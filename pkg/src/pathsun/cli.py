"""Command-line front end: ``pathsun recognize|certify|gen|tree|validate``.

Exit status is 0 when the run completes, 1 when a property violation or an
engine disagreement is found, and 2 on bad input.
"""

from __future__ import annotations

import argparse
import functools
import os
import re
import sys
import time
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import families
from .certificates import CLASSES as CERT_CLASSES
from .certificates import certify
from .chordal import NotChordal, build_clique_tree
from .cliquetree import MAX_TREE_CLIQUES, is_path_graph_oracle
from .graph import (
    Graph,
    GraphError,
    UnsupportedSize,
    complete,
    cycle,
    format_dot,
    format_edge_list,
    from_graph6,
    parse_edge_list,
    path,
    to_graph6,
)
from .recognize import CLASSES, ENGINES, default_engine, recognize
from .validation import SUITES

CAP_ENV = "PATHSUN_CAP_CLIQUES"
PARALLEL_BATCH = 32

NAMED = {"g1": families.g1, "g2": families.g2, "g3": families.g3, "f11_8": families.f11_8}
PATTERNS = [
    (re.compile(r"c(\d+)"), cycle),
    (re.compile(r"p(\d+)"), path),
    (re.compile(r"k(\d+)"), complete),
    (re.compile(r"sun(\d+)"), families.k_sun),
    (re.compile(r"f11_4k(\d+)"), families.f11_4k),
]


class InputError(Exception):
    pass


def _named(token: str) -> Graph | None:
    if token in NAMED:
        return NAMED[token]()
    for pattern, make in PATTERNS:
        m = pattern.fullmatch(token)
        if m:
            return make(int(m.group(1)))
    return None


def parse_graphs(text: str) -> list[tuple[str, Graph]]:
    """Edge-list text (first content line ``n <count>``) or graph6, one per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    content = [ln for ln in lines if ln and not ln.startswith("#")]
    if not content:
        return []
    if content[0].split()[0] == "n":
        g = parse_edge_list(text)
        return [(to_graph6(g), g)]
    out = []
    for ln in content:
        token = ln.split()[0]
        if token.startswith(">>graph6<<"):
            token = token[len(">>graph6<<"):]
        out.append((token, from_graph6(token)))
    return out


def load_graphs(source: str) -> list[tuple[str, Graph]]:
    """A file path, ``-`` for stdin, a built-in name, or a graph6 string."""
    try:
        if source == "-":
            return parse_graphs(sys.stdin.read())
        p = Path(source)
        if p.is_file():
            return parse_graphs(p.read_text())
        g = _named(source)
        if g is not None:
            return [(source, g)]
        return [(source, from_graph6(source))]
    except (GraphError, OSError) as exc:
        raise InputError(f"{source}: {exc}") from exc


def _cap(args) -> int:
    if args.cap_cliques is not None:
        return args.cap_cliques
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return MAX_TREE_CLIQUES
    if not raw.isdigit():
        raise InputError(f"{CAP_ENV} must be a positive integer, got {raw!r}")
    return int(raw)


def _jobs(args, batch: int) -> int:
    if args.jobs is not None:
        if args.jobs < 1:
            raise InputError("--jobs must be at least 1")
        return args.jobs
    return (os.cpu_count() or 1) if batch >= PARALLEL_BATCH else 1


def _map(fn: Callable, items: list, jobs: int) -> Iterable:
    """``map`` in input order, over a process pool when ``jobs > 1``."""
    if jobs <= 1 or len(items) <= 1:
        return map(fn, items)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# --- commands -----------------------------------------------------------------


def _recognize_one(item: tuple[str, Graph], classes: tuple[str, ...], engine: str | None, cap: int) -> tuple[str, bool]:
    label, g = item
    verdicts = [recognize(g, c, engine or default_engine(g), cap) for c in classes]
    return label + "  " + " ".join(v.text() for v in verdicts), all(v.agree for v in verdicts)


def cmd_recognize(args) -> int:
    graphs = load_graphs(args.input)
    classes = CLASSES if args.cls == "all" else (args.cls,)
    work = functools.partial(_recognize_one, classes=classes, engine=args.engine, cap=_cap(args))
    status = 0
    for line, agree in _map(work, graphs, _jobs(args, len(graphs))):
        print(line)
        if not agree:
            status = 1
    return status


def _certify_one(item: tuple[str, Graph], cls: str, as_json: bool) -> str:
    label, g = item
    try:
        cert = certify(g, cls)
    except UnsupportedSize as exc:
        return f"{label}  skipped: {exc}"
    if cert is None:
        return f"{label}  no certificate: member of {cls}"
    if as_json:
        return f"{label}  {cert.to_json()}"
    text = "  " + cert.to_text().replace("\n", "\n  ")
    return f"{label}  {cls}: not a member ({cert.kind.value}, re-verified)\n{text}"


def cmd_certify(args) -> int:
    graphs = load_graphs(args.input)
    work = functools.partial(_certify_one, cls=args.cls, as_json=args.json)
    for out in _map(work, graphs, _jobs(args, len(graphs))):
        print(out)
    return 0


def _emit(g: Graph, fmt: str, marked: Sequence[int] = ()) -> str:
    if fmt == "g6":
        tail = f" u={marked[0]} v={marked[1]}" if marked else ""
        return to_graph6(g) + tail + "\n"
    if fmt == "edges":
        head = f"# u={g.name(marked[0])} v={g.name(marked[1])}\n" if marked else ""
        return head + format_edge_list(g)
    return format_dot(g, marked=marked)


def cmd_gen(args) -> int:
    fam = args.family
    k = args.k if args.k is not None else args.param
    marked: tuple[int, ...] = ()
    try:
        if fam == "ksun":
            graphs = [families.k_sun(_need(k, "ksun needs k"))]
        elif fam in NAMED:
            graphs = [NAMED[fam]()]
        elif fam == "f11":
            graphs = [families.f11_4k(_need(k, "f11 needs --k"))]
        elif fam == "sdirected":
            p = families.s_directed_pointed(_need(args.type, "sdirected needs --type"), args.t)
            graphs, marked = [p.graph], (p.u, p.v)
        elif fam == "corpus":
            graphs = families.chordal_corpus(args.n_max)
        elif fam == "random":
            graphs = [
                families.random_chordal(args.n, args.budget, args.seed + i) for i in range(args.samples)
            ]
        else:
            raise InputError(f"unknown family {fam!r}")
    except (GraphError, UnsupportedSize) as exc:
        raise InputError(str(exc)) from exc
    sys.stdout.write("".join(_emit(g, args.format, marked) for g in graphs))
    return 0


def _need(value, message: str):
    if value is None:
        raise InputError(message)
    return value


def cmd_tree(args) -> int:
    for label, g in load_graphs(args.input):
        try:
            if args.path:
                res = is_path_graph_oracle(g, max_cliques=_cap(args))
                if not res.member:
                    print(f"// {label}: no clique-path tree")
                    continue
                tree = res.tree
            else:
                tree = build_clique_tree(g)
        except NotChordal as exc:
            print(f"// {label}: {exc}")
            continue
        sys.stdout.write(tree.to_dot())
    return 0


def cmd_validate(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    status = 0
    for name in names:
        kwargs = {}
        if name in ("hierarchy", "theorem", "lemmas", "certificates") and args.n_max is not None:
            kwargs["n_max"] = args.n_max
        if name in ("theorem", "certificates"):
            if args.samples is not None:
                kwargs["samples"] = args.samples
            kwargs["seed"] = args.seed
        if name == "prop44" and args.k:
            kwargs["ks"] = tuple(int(x) for x in args.k.split(","))
        for check in SUITES[name](**kwargs):
            print(check.line())
            if not check.ok:
                print("  first violation: " + check.violations[0])
                status = 1
    return status


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathsun", description="Recognize and certify chordal graph classes.")
    parser.add_argument("--timing", action="store_true", help="print elapsed time to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    rec = sub.add_parser("recognize", help="class membership per input graph")
    rec.add_argument("input", help="file, '-', built-in name (g1, c4, sun3, ...) or graph6 string")
    rec.add_argument("--class", dest="cls", choices=("all", *CLASSES), default="all")
    rec.add_argument("--engine", choices=ENGINES, help="default: both for n <= 7, else characterization")
    rec.add_argument("--cap-cliques", type=int)
    rec.add_argument("--jobs", type=int, help=f"worker processes (default: all cores for {PARALLEL_BATCH}+ graphs)")
    rec.set_defaults(run=cmd_recognize)

    cert = sub.add_parser("certify", help="re-verified non-membership certificates")
    cert.add_argument("input")
    cert.add_argument("--class", dest="cls", choices=CERT_CLASSES, required=True)
    cert.add_argument("--json", action="store_true", help="key-value output instead of text")
    cert.add_argument("--jobs", type=int, help="worker processes")
    cert.set_defaults(run=cmd_certify)

    gen = sub.add_parser("gen", help="emit graphs from a named family")
    gen.add_argument("family", help="ksun, g1, g2, g3, f11_8, f11, sdirected, corpus, random")
    gen.add_argument("param", nargs="?", type=int, help="k for ksun")
    gen.add_argument("--k", type=int)
    gen.add_argument("--type", type=int)
    gen.add_argument("--t", type=int)
    gen.add_argument("--n-max", type=int, default=5)
    gen.add_argument("--n", type=int, default=10)
    gen.add_argument("--budget", type=int, default=5)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--samples", type=int, default=1)
    gen.add_argument("--format", choices=("g6", "edges", "dot"), default="g6")
    gen.set_defaults(run=cmd_gen)

    tree = sub.add_parser("tree", help="clique tree as Graphviz text")
    tree.add_argument("input")
    tree.add_argument("--path", action="store_true", help="search for a clique-path tree instead")
    tree.add_argument("--cap-cliques", type=int)
    tree.set_defaults(run=cmd_tree)

    val = sub.add_parser("validate", help="run property suites")
    val.add_argument("suite", choices=("all", *SUITES))
    val.add_argument("--n-max", type=int)
    val.add_argument("--samples", type=int)
    val.add_argument("--seed", type=int, default=0)
    val.add_argument("--k", help="comma-separated k values for the prop44 suite")
    val.set_defaults(run=cmd_validate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        status = args.run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return status
