"""Class membership with either engine, and agreement between them.

The characterization engine uses the structural recognizers: asteroidal
triples for interval graphs, special asteroidal triples for directed path
graphs, and sun systems for path graphs. The oracle engine builds models
directly: a linear clique order, a clique-path tree, and for directed path
graphs a clique-path tree together with the absence of an induced odd sun.
"""

from __future__ import annotations

from dataclasses import dataclass

from .asteroidal import contains_induced_odd_sun, is_directed_path, is_interval
from .chordal import is_chordal
from .cliquetree import is_interval_oracle, is_path_graph_oracle
from .graph import Graph, UnsupportedSize
from .sunsystem import is_path_graph_via_theorem

CLASSES = ("interval", "directed-path", "path", "chordal")
ENGINES = ("characterization", "oracle", "both")
SMALL_N = 7


def _char(g: Graph, cls: str) -> bool:
    if cls == "chordal":
        return is_chordal(g)[0]
    if cls == "interval":
        return is_interval(g)
    if cls == "directed-path":
        return is_directed_path(g)
    return is_path_graph_via_theorem(g).member


def _oracle(g: Graph, cls: str, cap_cliques: int) -> bool:
    if cls == "chordal":
        return is_chordal(g)[0]
    if cls == "interval":
        return is_interval_oracle(g, max_cliques=min(cap_cliques, 10))
    path = is_path_graph_oracle(g, max_cliques=cap_cliques).member
    if cls == "path":
        return path
    return path and not contains_induced_odd_sun(g)[0]


@dataclass(frozen=True)
class Verdict:
    cls: str
    characterization: bool | None = None
    oracle: bool | None = None
    skipped: str | None = None

    @property
    def agree(self) -> bool:
        if self.characterization is None or self.oracle is None:
            return True
        return self.characterization == self.oracle

    @property
    def value(self) -> bool | None:
        return self.characterization if self.characterization is not None else self.oracle

    def text(self) -> str:
        if not self.agree:
            return f"{self.cls}=DISAGREE(characterization={_b(self.characterization)},oracle={_b(self.oracle)})"
        if self.value is None:
            return f"{self.cls}=skipped({self.skipped})"
        return f"{self.cls}={_b(self.value)}"


def _b(x: bool | None) -> str:
    return "none" if x is None else str(x).lower()


def default_engine(g: Graph) -> str:
    return "both" if g.n <= SMALL_N else "characterization"


def recognize(g: Graph, cls: str, engine: str, cap_cliques: int = 12) -> Verdict:
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    char = orc = None
    notes = []
    if engine in ("characterization", "both"):
        try:
            char = _char(g, cls)
        except UnsupportedSize as exc:
            notes.append(str(exc))
    if engine in ("oracle", "both"):
        try:
            orc = _oracle(g, cls, cap_cliques)
        except UnsupportedSize as exc:
            notes.append(str(exc))
    return Verdict(cls, char, orc, "; ".join(notes) or None)


def memberships(g: Graph, engine: str = "characterization") -> tuple[bool, bool, bool, bool]:
    """``(interval, directed-path, path, chordal)`` from one engine."""
    out = []
    for cls in CLASSES:
        v = recognize(g, cls, engine)
        if v.value is None:
            raise UnsupportedSize(v.skipped)
        out.append(v.value)
    return tuple(out)
