"""Spanning-tree packing: exact sigma with constructive certificates.

The packing routine is matroid-union augmentation over k forests
(Roskind-Tarjan style).  Edges are scanned once in lexicographic order;
an edge that cannot augment the current k forests is rejected for good
(greedy is optimal in a matroid).  On overall failure the labeled
closures of the rejected edges collapse into a partition witnessing the
Nash-Williams/Tutte violation; the witness is re-validated by
``verify_certificate`` rather than trusted.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod

from .exact import det_exact
from .graphs import Edge, Graph, VertexPartition, crossing_edges, partition
from .spectra import laplacian_spectrum

BELL_GUARD = 12          # sigma_bruteforce refuses above this vertex count
_FLOAT_EXACT = 2 ** 53   # beyond this, rounded float products are meaningless


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class PackResult:
    """Either k edge-disjoint spanning trees or a violating partition."""

    k: int
    success: bool
    trees: tuple[frozenset[Edge], ...] | None
    witness: VertexPartition | None


class _Packer:
    """State for one pack_trees run: k forests over the same vertex set."""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.n = g.n
        self.forest_adj: list[dict[int, set[int]]] = [dict() for _ in range(k)]
        self.dsu: list[_DSU] = [_DSU(g.n) for _ in range(k)]
        self.edge_forest: dict[Edge, int] = {}
        self.total = 0
        # clumps: vertex sets already known to be spanned by all k forests;
        # an edge inside one can never augment again, so it is rejected
        # without a second labeling search
        self.clumps = _DSU(g.n)

    def _forest_add(self, i: int, e: Edge):
        u, v = e
        self.forest_adj[i].setdefault(u, set()).add(v)
        self.forest_adj[i].setdefault(v, set()).add(u)
        self.edge_forest[e] = i

    def _forest_remove(self, i: int, e: Edge):
        u, v = e
        self.forest_adj[i][u].discard(v)
        self.forest_adj[i][v].discard(u)
        del self.edge_forest[e]

    def _rebuild_dsu(self, i: int):
        d = _DSU(self.n)
        for u, nbrs in self.forest_adj[i].items():
            for v in nbrs:
                if u < v:
                    d.union(u, v)
        self.dsu[i] = d

    def _tree_path(self, i: int, u: int, v: int) -> list[Edge]:
        """Edges on the unique u-v path in forest i (same component assumed)."""
        adj = self.forest_adj[i]
        parent = {u: u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if x == v:
                break
            for y in adj.get(x, ()):
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        path = []
        x = v
        while x != u:
            px = parent[x]
            path.append((px, x) if px < x else (x, px))
            x = px
        return path

    def try_insert(self, e: Edge) -> bool:
        """Insert e into the packing if possible; False means rejected.

        Rejection merges the component of the labeled closure containing
        e into the clump structure: that vertex set is spanned by every
        one of the k forests, so edges inside it stay rejected.
        """
        u, v = e
        if self.clumps.find(u) == self.clumps.find(v):
            return False
        for i in range(self.k):
            if self.dsu[i].find(u) != self.dsu[i].find(v):
                self._forest_add(i, e)
                self.dsu[i].union(u, v)
                self.total += 1
                return True

        # e closes a cycle in every forest: breadth-first labeling over the
        # exchange structure.  label[h] = edge on whose fundamental cycle h
        # was first reached; label[e] = None marks the root.
        label: dict[Edge, Edge | None] = {e: None}
        queue = deque([e])
        while queue:
            f = queue.popleft()
            fu, fv = f
            for i in range(self.k):
                if self.dsu[i].find(fu) != self.dsu[i].find(fv):
                    self._apply_chain(f, i, label)
                    return True
                for h in self._tree_path(i, fu, fv):
                    if h not in label:
                        label[h] = f
                        queue.append(h)

        # rejected: collapse the labeled closure to its component through e
        closure = _DSU(self.n)
        for (a, b) in label:
            closure.union(a, b)
        root = closure.find(u)
        members = [x for x in range(self.n) if closure.find(x) == root]
        first = members[0]
        for x in members[1:]:
            self.clumps.union(first, x)
        return False

    def _apply_chain(self, edge: Edge, forest: int, label: dict[Edge, Edge | None]):
        """Cascade of swaps: move `edge` into `forest`, its predecessor into
        the forest `edge` vacated, and so on back to the new edge."""
        touched = {forest}
        cur, target = edge, forest
        while label[cur] is not None:
            src = self.edge_forest[cur]
            self._forest_remove(src, cur)
            self._forest_add(target, cur)
            touched.update((src, target))
            cur, target = label[cur], src
        self._forest_add(target, cur)   # cur is the new edge
        touched.add(target)
        self.total += 1
        for i in touched:
            self._rebuild_dsu(i)

    def forests_as_edge_sets(self) -> list[frozenset[Edge]]:
        out: list[set[Edge]] = [set() for _ in range(self.k)]
        for e, i in self.edge_forest.items():
            out[i].add(e)
        return [frozenset(s) for s in out]


def pack_trees(g: Graph, k: int) -> PackResult:
    """k edge-disjoint spanning trees of g, or a Nash-Williams/Tutte witness.

    A witness is a vertex partition whose crossing-edge total is at most
    k(t-1) - 1, certifying that no k-packing exists.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n <= 1:
        return PackResult(k, True, tuple(frozenset() for _ in range(k)), None)

    comps = g.components()
    if len(comps) > 1:
        witness = partition(g.n, sorted(comps, key=min))
        return PackResult(k, False, None, witness)

    target = k * (g.n - 1)
    packer = _Packer(g, k)
    for e in sorted(g.edges):
        if packer.try_insert(e) and packer.total == target:
            trees = tuple(packer.forests_as_edge_sets())
            return PackResult(k, True, trees, None)

    # maximal packing is short of k spanning trees: the merged clumps
    # (plus leftover singletons) form the violating partition
    groups: dict[int, set[int]] = {}
    for x in range(g.n):
        groups.setdefault(packer.clumps.find(x), set()).add(x)
    blocks = sorted(groups.values(), key=min)
    witness = partition(g.n, blocks)
    return PackResult(k, False, None, witness)


@dataclass(frozen=True)
class TreePackingResult:
    """sigma, the packed trees, and (when available) the sigma+1 witness."""

    sigma: int
    trees: tuple[frozenset[Edge], ...]
    witness_partition: VertexPartition | None


def sigma(g: Graph) -> TreePackingResult:
    """Spanning-tree packing number with certificates for both directions.

    Ascends k = 1, 2, ... up to the trivial bound floor(m / (n-1)); the
    witness for sigma+1 is included whenever sigma+1 is within that bound
    (otherwise the edge count itself certifies).
    """
    if g.n <= 1:
        return TreePackingResult(0, (), None)
    kmax = g.m // (g.n - 1)
    best: tuple[frozenset[Edge], ...] = ()
    witness = None
    value = 0
    for k in range(1, kmax + 1):
        res = pack_trees(g, k)
        if res.success:
            value = k
            best = res.trees
        else:
            witness = res.witness
            break
    return TreePackingResult(value, best, witness)


@dataclass(frozen=True)
class SigmaOracle:
    sigma: int
    tau1: Fraction | None   # min over partitions of crossing / (t - 1)


def sigma_bruteforce(g: Graph) -> SigmaOracle:
    """Exact sigma by enumerating every set partition (Nash-Williams/Tutte).

    Refuses n > 12: the Bell numbers take over.  Also returns the exact
    strength tau_1; sigma = floor(tau_1).
    """
    n = g.n
    if n > BELL_GUARD:
        raise ValueError(f"brute-force oracle limited to n <= {BELL_GUARD}")
    if n <= 1:
        return SigmaOracle(0, None)

    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    # seed with the all-singletons partition (t = n, crossing = m); the
    # running minimum is kept as an integer pair for exact comparisons
    best_num, best_den = g.m, n - 1

    # restricted-growth enumeration: vertex v joins an existing block or
    # opens a new one; crossing edges are counted incrementally, and a
    # branch dies once crossing / (max reachable t - 1) >= current best.
    def descend(v: int, blocks: list[int], assigned: int, crossing: int):
        nonlocal best_num, best_den
        finest = len(blocks) + (n - v) - 1
        if finest >= 1 and crossing * best_den >= best_num * finest:
            return
        if v == n:
            t = len(blocks)
            if t >= 2 and crossing * best_den < best_num * (t - 1):
                best_num, best_den = crossing, t - 1
            return
        external = adj[v] & assigned
        for b in range(len(blocks)):
            inc = (external & ~blocks[b]).bit_count()
            blocks[b] |= 1 << v
            descend(v + 1, blocks, assigned | (1 << v), crossing + inc)
            blocks[b] &= ~(1 << v)
        blocks.append(1 << v)
        descend(v + 1, blocks, assigned | (1 << v), crossing + external.bit_count())
        blocks.pop()

    descend(1, [1], 1, 0)
    tau1 = Fraction(best_num, best_den)
    return SigmaOracle(int(tau1), tau1)


@dataclass(frozen=True)
class TreeCount:
    """Spanning-tree count by two independent routes.

    exact: determinant of the reduced Laplacian.
    eig_route: rounded product of nonzero Laplacian eigenvalues over n,
        or None when the product overflows floating point.
    agree: whether the routes match; None when the count is too large for
        the float route to round exactly (>= 2^53).
    """

    exact: int
    eig_route: int | None
    agree: bool | None


def count_spanning_trees(g: Graph) -> TreeCount:
    if g.n == 0:
        raise ValueError("empty graph")
    if g.n == 1:
        return TreeCount(1, 1, True)
    lap = g.laplacian_int()
    reduced = [row[1:] for row in lap[1:]]
    exact = det_exact(reduced)

    mus = laplacian_spectrum(g)
    product = prod(mus[1:]) / g.n
    if product != product or product in (float("inf"), float("-inf")):
        return TreeCount(exact, None, None)
    eig_route = round(product)
    agree = (exact == eig_route) if exact < _FLOAT_EXACT else None
    return TreeCount(exact, eig_route, agree)


def count_spanning_trees_exhaustive(g: Graph) -> int:
    """Literal enumeration of all spanning trees; guard m <= 18."""
    if g.m > 18:
        raise ValueError("exhaustive count limited to m <= 18")
    if g.n == 0:
        raise ValueError("empty graph")
    if g.n == 1:
        return 1
    count = 0
    edges = sorted(g.edges)
    for subset in combinations(edges, g.n - 1):
        d = _DSU(g.n)
        if all(d.union(u, v) for u, v in subset):
            count += 1
    return count


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str | None = None


def _is_spanning_tree(g: Graph, edges: frozenset[Edge]) -> bool:
    if len(edges) != g.n - 1:
        return False
    d = _DSU(g.n)
    for u, v in edges:
        if not d.union(u, v):
            return False
    return True


def verify_certificate(g: Graph, result: TreePackingResult) -> CertificateCheck:
    """Re-validate a TreePackingResult from scratch.

    Checks the trees (count, disjointness, membership, spanning), and the
    witness (valid partition with crossing <= (sigma+1)(t-1) - 1) or, when
    the witness is absent, that the trivial edge-count bound certifies.
    """
    k = result.sigma
    if k < 0:
        return CertificateCheck(False, "negative sigma")
    if len(result.trees) != k:
        return CertificateCheck(False, "tree count does not match sigma")

    if g.n <= 1:
        if k != 0 or result.trees or result.witness_partition is not None:
            return CertificateCheck(False, "trivial graph must certify sigma 0 trivially")
        return CertificateCheck(True)

    for tree in result.trees:
        if not tree <= g.edges:
            return CertificateCheck(False, "tree uses an edge not in the graph")
        if not _is_spanning_tree(g, tree):
            return CertificateCheck(False, "edge set is not a spanning tree")
    used = sum(len(t) for t in result.trees)
    if len(frozenset().union(*result.trees) if result.trees else frozenset()) != used:
        return CertificateCheck(False, "trees share an edge")

    w = result.witness_partition
    if w is None:
        if g.m >= (k + 1) * (g.n - 1):
            return CertificateCheck(False, "missing witness: edge bound does not certify")
        return CertificateCheck(True)
    if w.n != g.n:
        return CertificateCheck(False, "witness partition wrong vertex count")
    if w.t < 2:
        return CertificateCheck(False, "witness needs at least 2 blocks")
    total = crossing_edges(g, w).total
    if total > (k + 1) * (w.t - 1) - 1:
        return CertificateCheck(False, "witness crossing count is not violating")
    return CertificateCheck(True)


def verify_pack_result(g: Graph, result: PackResult) -> CertificateCheck:
    """Re-validate a single pack_trees outcome for its stated k."""
    if result.success:
        trees = result.trees or ()
        if len(trees) != result.k:
            return CertificateCheck(False, "tree count does not match k")
        if g.n <= 1:
            if any(trees) if trees else False:
                return CertificateCheck(False, "trivial graph packs empty trees")
            return CertificateCheck(True)
        seen: set[Edge] = set()
        for tree in trees:
            if not tree <= g.edges:
                return CertificateCheck(False, "tree uses an edge not in the graph")
            if not _is_spanning_tree(g, tree):
                return CertificateCheck(False, "edge set is not a spanning tree")
            if seen & tree:
                return CertificateCheck(False, "trees share an edge")
            seen |= tree
        return CertificateCheck(True)
    w = result.witness
    if w is None or w.n != g.n or w.t < 2:
        return CertificateCheck(False, "failure needs a proper witness partition")
    if crossing_edges(g, w).total > result.k * (w.t - 1) - 1:
        return CertificateCheck(False, "witness crossing count is not violating")
    return CertificateCheck(True)
