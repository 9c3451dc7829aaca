"""Weighted multigraphs with parallel edges, kept exact.

Vertices are identified by label externally and by dense index internally.
Edge resistances are exact ``Fraction`` values; parallel edges are retained
individually (they matter: two 1-ohm resistors in parallel are 1/2 ohm).
Self-loops are rejected at construction since they contribute nothing to the
Laplacian and usually indicate malformed input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DuplicateLabel,
    NonPositiveResistance,
    ParseError,
    SelfLoop,
    UnknownLabel,
)


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    resistance: Fraction

    def __post_init__(self):
        if self.u == self.v:
            raise SelfLoop(f"self-loop at vertex index {self.u}")
        if self.resistance <= 0:
            raise NonPositiveResistance(f"resistance {self.resistance} must be > 0")

    @property
    def conductance(self) -> Fraction:
        return 1 / self.resistance


@dataclass(frozen=True)
class Multigraph:
    vertex_labels: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise ParseError("a multigraph needs at least one vertex")
        if len(set(self.vertex_labels)) != n:
            raise DuplicateLabel("vertex labels must be distinct")
        for e in self.edges:
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise UnknownLabel(f"edge endpoint out of range: ({e.u},{e.v})")

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def index(self, label: str) -> int:
        try:
            return self.vertex_labels.index(label)
        except ValueError:
            raise UnknownLabel(f"unknown vertex label {label!r}") from None


def build_multigraph(labels, edge_triples) -> Multigraph:
    """Build a multigraph from labels and (label, label, resistance) triples.

    Edge order is preserved; parallel edges are kept as-is.  Resistances may
    be any value Fraction() accepts (int, Fraction, "p/q", decimal string).
    """
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise DuplicateLabel("duplicate vertex label")
    idx = {lab: i for i, lab in enumerate(labels)}
    edges = []
    for u_lab, v_lab, r in edge_triples:
        if u_lab not in idx:
            raise UnknownLabel(f"unknown vertex label {u_lab!r}")
        if v_lab not in idx:
            raise UnknownLabel(f"unknown vertex label {v_lab!r}")
        edges.append(Edge(idx[u_lab], idx[v_lab], Fraction(r)))
    return Multigraph(labels, tuple(edges))


def incidence(g: Multigraph) -> list[list[int]]:
    """Vertex-by-edge incidence matrix.

    Orientation rule: +1 at the lower vertex index, -1 at the higher one.
    Any fixed rule gives the same Laplacian Q R^-1 Q^T; this one is
    deterministic under relabeling-free reconstruction.
    """
    n, m = g.vertex_count, g.edge_count
    q = [[0] * m for _ in range(n)]
    for j, e in enumerate(g.edges):
        lo, hi = min(e.u, e.v), max(e.u, e.v)
        q[lo][j] = 1
        q[hi][j] = -1
    return q


def is_connected(g: Multigraph) -> bool:
    """Breadth-first connectivity of the underlying simple graph."""
    n = g.vertex_count
    adj = [[] for _ in range(n)]
    for e in g.edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                queue.append(v)
    return all(seen)


def merge_parallel(g: Multigraph) -> Multigraph:
    """Collapse each parallel-edge bundle into a single equivalent resistor.

    k resistances r_1..r_k between the same pair become 1 / sum(1/r_i).
    The Laplacian is unchanged entry-for-entry.
    """
    bundles: dict[tuple[int, int], Fraction] = {}
    order: list[tuple[int, int]] = []
    for e in g.edges:
        key = (min(e.u, e.v), max(e.u, e.v))
        if key not in bundles:
            bundles[key] = Fraction(0)
            order.append(key)
        bundles[key] += e.conductance
    edges = tuple(Edge(u, v, 1 / bundles[(u, v)]) for u, v in order)
    return Multigraph(g.vertex_labels, edges)


def parse_fraction(text: str) -> Fraction:
    """Parse a resistance token: integer, p/q rational, or decimal."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from None


def parse_edge_list(text: str) -> Multigraph:
    """Parse the edge-list text format.

    Grammar: '#' comment lines, one 'vertices <lab> <lab> ...' line, then
    'edge <u> <v> <resistance>' lines.  Unknown directives are an error.
    """
    labels: tuple[str, ...] | None = None
    triples: list[tuple[str, str, Fraction]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if labels is not None:
                raise ParseError(f"line {lineno}: repeated 'vertices' directive")
            if len(parts) < 2:
                raise ParseError(f"line {lineno}: 'vertices' needs at least one label")
            labels = tuple(parts[1:])
        elif parts[0] == "edge":
            if labels is None:
                raise ParseError(f"line {lineno}: 'edge' before 'vertices'")
            if len(parts) != 4:
                raise ParseError(f"line {lineno}: expected 'edge <u> <v> <resistance>'")
            triples.append((parts[1], parts[2], parse_fraction(parts[3])))
        else:
            raise ParseError(f"line {lineno}: unknown directive {parts[0]!r}")
    if labels is None:
        raise ParseError("missing 'vertices' line")
    return build_multigraph(labels, triples)


def format_edge_list(g: Multigraph) -> str:
    lines = ["vertices " + " ".join(g.vertex_labels)]
    for e in g.edges:
        lines.append(
            f"edge {g.vertex_labels[e.u]} {g.vertex_labels[e.v]} {e.resistance}"
        )
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Multigraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Multigraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
