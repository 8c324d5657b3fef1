"""Vertex-labeled graphs, permutation-labeling checks and maximal constructions.

Maximality is checked against the graph's own labeling: a permutation graph
is maximal when every missing edge would repeat an existing edge label.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .labels import CapError, build_collision_table

__all__ = [
    "ENUMERATION_CAP",
    "ENUMERATION_N_CAP",
    "POLICIES",
    "VertexLabeledGraph",
    "complete_graph",
    "enumerate_maximal",
    "export_graph",
    "is_maximal",
    "is_permutation_labeling",
    "maximal_graph",
    "parse_edge_list",
]

ENUMERATION_N_CAP = 12
ENUMERATION_CAP = 10**6
POLICIES = ("lex-min", "lex-max", "random")

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class VertexLabeledGraph:
    """Vertices are 1..n; ``labeling[v - 1]`` is the label of vertex v."""

    n: int
    edges: frozenset[Edge]
    labeling: tuple[int, ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labeling: Iterable[int] | Mapping[int, int] | None = None):
        if isinstance(labeling, Mapping):
            labeling = [labeling[v] for v in range(1, n + 1)]
        labels = tuple(range(1, n + 1)) if labeling is None else tuple(labeling)
        if sorted(labels) != list(range(1, n + 1)):
            raise ValueError("labeling must be a bijection onto 1..n")
        norm = frozenset(_norm(u, v) for u, v in edges)
        for u, v in norm:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", norm)
        object.__setattr__(self, "labeling", labels)

    def label(self, v: int) -> int:
        return self.labeling[v - 1]

    def edge_label(self, u: int, v: int) -> int:
        a, b = self.label(u), self.label(v)
        return math.perm(max(a, b), min(a, b))

    def non_edges(self) -> Iterator[Edge]:
        for e in itertools.combinations(range(1, self.n + 1), 2):
            if e not in self.edges:
                yield e

    def without(self, u: int, v: int) -> VertexLabeledGraph:
        return VertexLabeledGraph(self.n, self.edges - {_norm(u, v)}, self.labeling)

    def with_edge(self, u: int, v: int) -> VertexLabeledGraph:
        return VertexLabeledGraph(self.n, self.edges | {_norm(u, v)}, self.labeling)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def complete_graph(n: int) -> VertexLabeledGraph:
    return VertexLabeledGraph(n, itertools.combinations(range(1, n + 1), 2))


def is_permutation_labeling(g: VertexLabeledGraph) -> bool:
    """True when all induced edge labels are distinct."""
    seen = set()
    for u, v in g.edges:
        value = g.edge_label(u, v)
        if value in seen:
            return False
        seen.add(value)
    return True


def is_maximal(g: VertexLabeledGraph) -> bool:
    if not is_permutation_labeling(g):
        raise ValueError("is_maximal needs a permutation-labeled graph")
    used = {g.edge_label(u, v) for u, v in g.edges}
    return all(g.edge_label(u, v) in used for u, v in g.non_edges())


def maximal_graph(n: int, policy: str = "lex-min", seed: int = 0) -> VertexLabeledGraph:
    """One edge per collision class, identity labeling.

    ``lex-min``/``lex-max`` take the (high, low)-smallest/largest pair of each
    class; ``random`` draws from a ``random.Random(seed)`` in class order.
    """
    table = build_collision_table(n)
    rng = random.Random(seed)
    edges = []
    for pairs in table.classes.values():
        if policy == "lex-min":
            pick = pairs[0]
        elif policy == "lex-max":
            pick = pairs[-1]
        elif policy == "random":
            pick = pairs[rng.randrange(len(pairs))]
        else:
            raise ValueError(f"unknown policy {policy!r}; expected one of {POLICIES}")
        edges.append((pick.low, pick.high))
    return VertexLabeledGraph(n, edges)


def enumerate_maximal(n: int, n_cap: int = ENUMERATION_N_CAP,
                      max_graphs: int = ENUMERATION_CAP) -> Iterator[VertexLabeledGraph]:
    """Every maximal permutation graph on 1..n with identity labeling.

    Classes are visited in increasing value order and the choices inside a
    class in (high, low) order, so the output order is canonical.
    """
    if n > n_cap:
        raise CapError(f"n={n} exceeds the enumeration cap of {n_cap}")
    table = build_collision_table(n)
    total = math.prod(len(c) for c in table.classes.values())
    if total > max_graphs:
        raise CapError(f"{total} maximal graphs at n={n} exceeds the cap of {max_graphs}")
    choices = [[(p.low, p.high) for p in pairs] for pairs in table.classes.values()]
    for pick in itertools.product(*choices):
        yield VertexLabeledGraph(n, pick)


def export_graph(g: VertexLabeledGraph, fmt: str = "edge-list") -> str:
    fmt = fmt.replace("_", "-")
    if fmt == "edge-list":
        return "".join(f"{u} {v}\n" for u, v in g.sorted_edges())
    if fmt == "dot":
        lines = ["graph G {"]
        lines += [f'  {v} [label="{g.label(v)}"];' for v in range(1, g.n + 1)]
        lines += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def parse_edge_list(text: str, n: int | None = None) -> VertexLabeledGraph:
    """Read whitespace-separated 1-based pairs; '#' starts a comment."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two vertices, got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        n = max((max(e) for e in edges), default=0)
    return VertexLabeledGraph(n, edges)
