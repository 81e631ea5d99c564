"""Undirected simple graphs, vertex partitions, and the edge-list file format.

Vertices are dense integer indices 0..n-1.  Everything here is immutable
after construction, so graphs and partitions can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus a frozenset of (u, v) pairs with u < v."""

    n: int
    edges: frozenset[Edge]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nbr: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return tuple(frozenset(s) for s in nbr)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.neighbors)

    def degree_if_regular(self) -> int | None:
        """The common degree when the graph is regular, else None."""
        degs = set(self.degrees)
        if len(degs) == 1:
            return next(iter(degs))
        return None

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def adjacency_int(self) -> list[list[int]]:
        """Adjacency matrix with exact integer entries (for exact char-poly work)."""
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u][v] = a[v][u] = 1
        return a

    def laplacian_matrix(self) -> np.ndarray:
        lap = -self.adjacency_matrix()
        for v in range(self.n):
            lap[v, v] = self.degrees[v]
        return lap

    def laplacian_int(self) -> list[list[int]]:
        lap = [[-x for x in row] for row in self.adjacency_int()]
        for v in range(self.n):
            lap[v][v] = self.degrees[v]
        return lap

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def components(self) -> list[frozenset[int]]:
        """Connected components as vertex sets, ordered by smallest member."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], {s}
            seen[s] = True
            while stack:
                u = stack.pop()
                for w in self.neighbors[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.add(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


def make_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from vertex count and edge pairs.

    Duplicate pairs collapse silently; self-loops and out-of-range
    indices are construction errors.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    edges = set()
    for pair in edge_list:
        u, v = pair
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        edges.add(_norm_edge(u, v))
    return Graph(n, frozenset(edges))


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_minus_matching(n: int, k: int) -> Graph:
    """K_n with the k matching edges {0,1}, {2,3}, ..., {2k-2,2k-1} removed."""
    if 2 * k > n:
        raise ValueError(f"matching of size {k} does not fit in {n} vertices")
    removed = {(2 * i, 2 * i + 1) for i in range(k)}
    return make_graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in removed]
    )


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shifted = [(u + g1.n, v + g1.n) for u, v in g2.edges]
    return make_graph(g1.n + g2.n, list(g1.edges) + shifted)


def add_edges(g: Graph, pairs: Iterable[Sequence[int]]) -> Graph:
    """Return g plus the given edges; duplicates and loops are errors."""
    new = set(g.edges)
    for pair in pairs:
        u, v = pair
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={g.n}")
        e = _norm_edge(u, v)
        if e in new:
            raise ValueError(f"duplicate edge {e}")
        new.add(e)
    return Graph(g.n, frozenset(new))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by a vertex set, re-indexed along sorted(vertices)."""
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("empty vertex set")
    if vs[0] < 0 or vs[-1] >= g.n:
        raise ValueError("vertex out of range")
    index = {v: i for i, v in enumerate(vs)}
    sub = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return make_graph(len(vs), sub)


def average_degree(g: Graph, vertices: Iterable[int]) -> Fraction:
    """Average degree of the induced subgraph, exact: 2*|E(G[S])| / |S|."""
    vs = set(vertices)
    if not vs:
        raise ValueError("empty vertex set")
    internal = sum(1 for u, v in g.edges if u in vs and v in vs)
    return Fraction(2 * internal, len(vs))


@dataclass(frozen=True)
class VertexPartition:
    """Ordered partition of 0..n-1 into nonempty disjoint blocks."""

    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if seen & b:
                raise ValueError("overlapping blocks")
            seen |= b
        if seen != set(range(self.n)):
            raise ValueError("blocks do not cover the vertex set")

    @property
    def t(self) -> int:
        return len(self.blocks)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        owner = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in b:
                owner[v] = i
        return tuple(owner)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def partition(n: int, blocks: Iterable[Iterable[int]]) -> VertexPartition:
    return VertexPartition(n, tuple(frozenset(b) for b in blocks))


def singleton_partition(n: int) -> VertexPartition:
    return partition(n, [[v] for v in range(n)])


@dataclass(frozen=True)
class CrossingCounts:
    """e(X_i, X_j) for each block pair, boundary degrees r_i, and the total."""

    pair_counts: tuple[tuple[int, ...], ...]   # symmetric, zero diagonal
    boundary: tuple[int, ...]                  # r_i = e(X_i, V \ X_i)
    total: int                                 # sum over i < j


def crossing_edges(g: Graph, p: VertexPartition) -> CrossingCounts:
    if p.n != g.n:
        raise ValueError("partition does not match graph")
    t = p.t
    cnt = [[0] * t for _ in range(t)]
    owner = p.block_of
    for u, v in g.edges:
        i, j = owner[u], owner[v]
        if i != j:
            cnt[i][j] += 1
            cnt[j][i] += 1
    boundary = tuple(sum(row) for row in cnt)
    total = sum(boundary) // 2
    return CrossingCounts(tuple(tuple(row) for row in cnt), boundary, total)


# ---------------------------------------------------------------------------
# Edge-list text format: first line "n m", then m lines "u v" (0-indexed).
# This is the canonical on-disk graph format for the whole toolkit.
# ---------------------------------------------------------------------------

def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; errors carry 1-based line numbers."""
    lines = text.splitlines()
    rows = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip()]
    if not rows:
        raise ValueError("line 1: empty input, expected 'n m' header")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ValueError(f"line {lineno}: expected 'n m' header")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"line {lineno}: expected integers in 'n m' header") from None
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"line {lineno}: header declares {m} edges, found {len(body)}")
    pairs = []
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected integer endpoints") from None
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: edge ({u}, {v}) out of range for n={n}")
        pairs.append((u, v))
    return make_graph(n, pairs)
