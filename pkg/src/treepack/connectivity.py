"""Global edge connectivity: Stoer-Wagner plus a subset-scan oracle."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph

BRUTE_FORCE_GUARD = 16


@dataclass(frozen=True)
class CutResult:
    """Minimum cut value together with one side achieving it."""

    value: int
    side: frozenset[int]


def edge_connectivity(g: Graph) -> CutResult:
    """Exact global minimum edge cut via Stoer-Wagner with unit weights.

    Vertex selection is deterministic (maximum attachment weight, ties to
    the smallest index) so repeated runs return the same side.
    """
    if g.n < 2:
        raise ValueError("edge connectivity needs at least 2 vertices")
    comps = g.components()
    if len(comps) > 1:
        return CutResult(0, min(comps, key=min))

    n = g.n
    w = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        w[u][v] = w[v][u] = 1

    merged: dict[int, frozenset[int]] = {v: frozenset((v,)) for v in range(n)}
    active = list(range(n))
    best_value: int | None = None
    best_side: frozenset[int] = frozenset()

    while len(active) > 1:
        start = active[0]
        attach = {v: w[start][v] for v in active if v != start}
        order = [start]
        while attach:
            nxt = min(attach, key=lambda v: (-attach[v], v))
            phase_weight = attach.pop(nxt)
            order.append(nxt)
            for v in attach:
                attach[v] += w[nxt][v]
        s, t = order[-2], order[-1]
        if best_value is None or phase_weight < best_value:
            best_value = phase_weight
            best_side = merged[t]
        # contract t into s
        for v in active:
            if v not in (s, t):
                w[s][v] += w[t][v]
                w[v][s] = w[s][v]
        merged[s] = merged[s] | merged[t]
        active.remove(t)

    assert best_value is not None
    return CutResult(best_value, best_side)


def edge_connectivity_bruteforce(g: Graph) -> int:
    """Minimum crossing count over all proper subsets containing vertex 0."""
    if g.n > BRUTE_FORCE_GUARD:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_GUARD}")
    if g.n < 2:
        raise ValueError("edge connectivity needs at least 2 vertices")
    n = g.n
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    full = (1 << n) - 1
    best = g.m + 1
    for half in range(1 << (n - 1)):
        mask = (half << 1) | 1      # vertex 0 always inside
        if mask == full:
            continue
        outside = full & ~mask
        crossing = 0
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            crossing += (adj[v] & outside).bit_count()
            m &= m - 1
        if crossing < best:
            best = crossing
    return best
