"""Hypergraphs on 1-based vertices with edges of any order 1..n.

Edges are stored as label bitmasks (bit i-1 = vertex i), which gives a
canonical ordering for serialization and O(1) subset tests against basis
labels.  The text format is line oriented:

    # comment
    n 3
    e 1
    e 2 3
    e 1 2 3

Vertex indices on an `e` line must be strictly increasing; duplicate edges
are an error, not a silent toggle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from . import _bits
from .errors import FormatError

MAX_VERTICES = 64


def edge_mask(vertices: Iterable[int], n: int) -> int:
    """Validate a vertex subset against 1..n and return its label mask."""
    vs = set(vertices)
    if not vs:
        raise ValueError("edge must be a nonempty vertex subset")
    for v in vs:
        if not (isinstance(v, int) and 1 <= v <= n):
            raise ValueError(f"vertex {v!r} out of range 1..{n}")
    return _bits.mask_from_vertices(vs)


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus a set of hyperedges, each a label bitmask."""

    n: int
    edges: frozenset[int]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        for e in self.edges:
            if not 0 < e < 1 << self.n:
                raise ValueError(f"edge mask {e:#x} invalid for n={self.n}")

    @classmethod
    def from_sets(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(n, frozenset(edge_mask(e, n) for e in edges))

    def edge_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(_bits.vertices_from_mask(e) for e in self.edges)

    def sorted_edges(self) -> list[int]:
        """Edges in canonical order: by size, then lexicographic vertex tuple."""
        return sorted(self.edges, key=lambda e: (e.bit_count(), sorted(_bits.vertices_from_mask(e))))

    def orders(self) -> frozenset[int]:
        return frozenset(e.bit_count() for e in self.edges)


@dataclass(frozen=True)
class UniformityClass:
    """Edge-order classification: empty, uniform of one order k, or mixed."""

    kind: str  # "empty" | "uniform" | "mixed"
    orders: frozenset[int]

    def __post_init__(self) -> None:
        if self.kind not in ("empty", "uniform", "mixed"):
            raise ValueError(f"bad kind {self.kind!r}")
        if self.kind == "uniform" and len(self.orders) != 1:
            raise ValueError("uniform class must carry exactly one order")

    @property
    def k(self) -> int:
        if self.kind != "uniform":
            raise ValueError("only uniform classes have a single order k")
        return next(iter(self.orders))

    def __str__(self) -> str:
        if self.kind == "empty":
            return "empty"
        if self.kind == "uniform":
            return f"uniform {self.k}"
        return "mixed " + ",".join(str(k) for k in sorted(self.orders))


def parse(text: str) -> Hypergraph:
    """Parse the edge-list text format; malformed or duplicate input raises."""
    n = None
    edges: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "n":
            if n is not None:
                raise FormatError(f"line {lineno}: repeated vertex-count line")
            if len(fields) != 2:
                raise FormatError(f"line {lineno}: expected 'n <int>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise FormatError(f"line {lineno}: bad vertex count {fields[1]!r}") from None
            if not 1 <= n <= MAX_VERTICES:
                raise FormatError(f"line {lineno}: vertex count {n} out of range")
        elif fields[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before vertex-count line")
            if len(fields) == 1:
                raise FormatError(f"line {lineno}: empty edge")
            try:
                vs = [int(f) for f in fields[1:]]
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer vertex") from None
            if any(a >= b for a, b in zip(vs, vs[1:])):
                raise FormatError(f"line {lineno}: vertices must be strictly increasing")
            if not all(1 <= v <= n for v in vs):
                raise FormatError(f"line {lineno}: vertex out of range 1..{n}")
            mask = _bits.mask_from_vertices(vs)
            if mask in edges:
                raise FormatError(f"line {lineno}: duplicate edge {vs}")
            edges.add(mask)
        else:
            raise FormatError(f"line {lineno}: unknown directive {fields[0]!r}")
    if n is None:
        raise FormatError("missing vertex-count line 'n <int>'")
    return Hypergraph(n, frozenset(edges))


def serialize(h: Hypergraph) -> str:
    lines = [f"n {h.n}"]
    for e in h.sorted_edges():
        lines.append("e " + " ".join(str(v) for v in sorted(_bits.vertices_from_mask(e))))
    return "\n".join(lines) + "\n"


def toggle_edge(h: Hypergraph, vertices: Iterable[int]) -> Hypergraph:
    """Symmetric difference: remove the edge if present, add it if absent."""
    mask = edge_mask(vertices, h.n)
    return Hypergraph(h.n, h.edges ^ {mask})


def classify_uniformity(h: Hypergraph) -> UniformityClass:
    orders = h.orders()
    if not orders:
        return UniformityClass("empty", frozenset())
    if len(orders) == 1:
        return UniformityClass("uniform", orders)
    return UniformityClass("mixed", orders)


def neighbourhood(h: Hypergraph, i: int) -> frozenset[frozenset[int]]:
    """The tuples completing vertex i to a hyperedge; empty tuple for the edge {i}."""
    if not 1 <= i <= h.n:
        raise ValueError(f"vertex {i} out of range 1..{h.n}")
    bit = 1 << (i - 1)
    return frozenset(_bits.vertices_from_mask(e ^ bit) for e in h.edges if e & bit)


def count_states(n: int, k: int | None = None) -> int:
    """Exact number of hypergraph states: 2**C(n,k) for one order, 2**(2**n - 1) for all."""
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    if k is None:
        return 1 << ((1 << n) - 1)
    if not 1 <= k <= n:
        raise ValueError(f"edge order {k} out of range 1..{n}")
    return 1 << comb(n, k)


def to_dot(h: Hypergraph) -> str:
    """Render to DOT: pair edges as plain edges, singletons as a double circle,
    larger edges as a point-shaped hub connected to its members."""
    singletons = {e.bit_length() for e in h.edges if e.bit_count() == 1}
    out = ["graph hypergraph {", "  node [shape=circle];"]
    for v in range(1, h.n + 1):
        deco = " [peripheries=2]" if v in singletons else ""
        out.append(f"  {v}{deco};")
    hub = 0
    for e in h.sorted_edges():
        vs = sorted(_bits.vertices_from_mask(e))
        if len(vs) == 1:
            continue
        if len(vs) == 2:
            out.append(f"  {vs[0]} -- {vs[1]};")
        else:
            out.append(f'  h{hub} [shape=point, label=""];')
            out.extend(f"  h{hub} -- {v};" for v in vs)
            hub += 1
    out.append("}")
    return "\n".join(out) + "\n"
