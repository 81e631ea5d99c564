"""Dense symmetric eigensolving, quotient matrices, and interlacing checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact import (
    IntPoly,
    char_poly_exact,
    char_poly_rational,
    clear_denominators,
    isolate_real_roots,
)
from .graphs import Graph, VertexPartition, average_degree, crossing_edges

SYMMETRY_RTOL = 1e-12
INTERLACING_TOL = 1e-9
GROUPING_TOL = 1e-7


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted descending, with a multiplicity-grouping tolerance."""

    values: tuple[float, ...]
    grouping_tol: float = GROUPING_TOL

    def __len__(self) -> int:
        return len(self.values)

    def multiplicities(self) -> list[tuple[float, int]]:
        """Group near-equal values: list of (representative, count)."""
        groups: list[tuple[float, int]] = []
        for v in self.values:
            if groups and abs(groups[-1][0] - v) <= self.grouping_tol:
                rep, cnt = groups[-1]
                groups[-1] = (rep, cnt + 1)
            else:
                groups.append((v, 1))
        return groups

    def lambda2(self) -> float:
        if len(self.values) < 2:
            raise ValueError("spectrum has fewer than 2 eigenvalues")
        return self.values[1]


def eig_symmetric(m: np.ndarray, want_vectors: bool = False):
    """Eigenvalues (descending) of a dense symmetric matrix.

    Returns a Spectrum, or (Spectrum, eigenvectors) with orthonormal
    columns matching the eigenvalue order.  Rejects asymmetric input.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("square matrix required")
    scale = np.linalg.norm(a) or 1.0
    if np.linalg.norm(a - a.T) > SYMMETRY_RTOL * scale:
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2
    if want_vectors:
        vals, vecs = np.linalg.eigh(a)
        order = np.argsort(vals)[::-1]
        return Spectrum(tuple(float(v) for v in vals[order])), vecs[:, order]
    vals = np.linalg.eigvalsh(a)
    return Spectrum(tuple(float(v) for v in vals[::-1]))


def adjacency_spectrum(g: Graph) -> Spectrum:
    if g.n == 0:
        raise ValueError("empty graph has no spectrum")
    return eig_symmetric(g.adjacency_matrix())


def lambda2(g: Graph) -> float:
    if g.n == 0:
        raise ValueError("empty graph")
    if g.n == 1:
        raise ValueError("lambda2 undefined for a single vertex")
    return adjacency_spectrum(g).lambda2()


def laplacian_spectrum(g: Graph) -> tuple[float, ...]:
    """Laplacian eigenvalues sorted ascending (mu_1 = 0 for any graph)."""
    if g.n == 0:
        raise ValueError("empty graph")
    spec = eig_symmetric(g.laplacian_matrix())
    return tuple(reversed(spec.values))


def exact_adjacency_roots(g: Graph, precision: Fraction = Fraction(1, 10**12)) -> list[float]:
    """All n adjacency eigenvalues from the exact characteristic polynomial.

    Sturm-isolates the roots of char_poly_exact(A) and expands
    multiplicities; the float midpoints come back sorted descending.
    Independent of the floating eigensolver, so the two can be compared.
    """
    cp = char_poly_exact(g.adjacency_int())
    out: list[float] = []
    for interval, mult in isolate_real_roots(cp, precision):
        out.extend([interval.as_float()] * mult)
    out.sort(reverse=True)
    if len(out) != g.n:
        raise AssertionError("adjacency char poly must have n real roots")
    return out


@dataclass(frozen=True)
class QuotientMatrix:
    """Block-averaged neighbor counts b_ij = e(X_i, X_j) / |X_i| for a partition.

    The diagonal carries the average internal degree 2 e(X_i, X_i) / |X_i|.
    Entries are exact Fractions; row i sums to d for a d-regular graph.
    """

    entries: tuple[tuple[Fraction, ...], ...]
    partition: VertexPartition

    @property
    def t(self) -> int:
        return len(self.entries)

    def as_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries])

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def as_int(self) -> list[list[int]]:
        if not self.is_integer():
            raise ValueError("quotient matrix has non-integer entries")
        return [[int(x) for x in row] for row in self.entries]

    def char_poly(self) -> IntPoly:
        """Exact char poly, denominators cleared (roots unchanged)."""
        if self.is_integer():
            return char_poly_exact(self.as_int())
        return clear_denominators(char_poly_rational(self.entries))

    def eigenvalues_exact(self, precision: Fraction = Fraction(1, 10**12)) -> list[float]:
        """Eigenvalues via the exact char-poly + Sturm route, descending.

        Quotient matrices are not symmetric in general, but for a graph
        partition they are similar to a symmetric matrix, so all roots
        are real; this route avoids a nonsymmetric float eigensolver.
        """
        out: list[float] = []
        for interval, mult in isolate_real_roots(self.char_poly(), precision):
            out.extend([interval.as_float()] * mult)
        out.sort(reverse=True)
        if len(out) != self.t:
            raise AssertionError("quotient char poly must have t real roots")
        return out


def quotient_matrix(g: Graph, p: VertexPartition, exact: bool = True) -> QuotientMatrix | np.ndarray:
    """Quotient matrix of a partition; exact Fractions by default.

    With exact=False, just the float matrix is returned.
    """
    cross = crossing_edges(g, p)
    sizes = p.sizes()
    t = p.t
    internal = [0] * t
    owner = p.block_of
    for u, v in g.edges:
        if owner[u] == owner[v]:
            internal[owner[u]] += 1
    rows = []
    for i in range(t):
        row = []
        for j in range(t):
            if i == j:
                row.append(Fraction(2 * internal[i], sizes[i]))
            else:
                row.append(Fraction(cross.pair_counts[i][j], sizes[i]))
        rows.append(tuple(row))
    q = QuotientMatrix(tuple(rows), p)
    return q if exact else q.as_float()


def is_equitable(g: Graph, p: VertexPartition) -> bool:
    """True iff every vertex has exactly b_ij neighbors in block j."""
    if p.n != g.n:
        raise ValueError("partition does not match graph")
    owner = p.block_of
    profile: dict[int, list[int]] = {}
    for v in range(g.n):
        counts = [0] * p.t
        for w in g.neighbors[v]:
            counts[owner[w]] += 1
        b = owner[v]
        if b in profile:
            if profile[b] != counts:
                return False
        else:
            profile[b] = counts
    return True


@dataclass(frozen=True)
class InterlacingResult:
    ok: bool
    worst_margin: float   # most negative slack across both chains (>= -tol when ok)


def check_interlacing(
    outer: Sequence[float], inner: Sequence[float], tol: float = INTERLACING_TOL
) -> InterlacingResult:
    """Check lambda_i(A) >= lambda_i(B) >= lambda_{n-m+i}(A) within tol.

    Both inputs are descending eigenvalue lists (Spectrum.values works).
    """
    a = list(outer.values) if isinstance(outer, Spectrum) else list(outer)
    b = list(inner.values) if isinstance(inner, Spectrum) else list(inner)
    n, m = len(a), len(b)
    if m > n:
        raise ValueError("inner spectrum longer than outer")
    worst = float("inf")
    for i in range(m):
        worst = min(worst, a[i] - b[i])
        worst = min(worst, b[i] - a[n - m + i])
    return InterlacingResult(worst >= -tol, worst)


def disjoint_sets_bound(g: Graph, a: set[int], b: set[int]) -> Fraction:
    """Lower bound min(avg-degree(A), avg-degree(B)) on lambda2.

    Only valid when A and B are disjoint with no crossing edges;
    violating that is an error, not a silent wrong answer.
    """
    sa, sb = set(a), set(b)
    if not sa or not sb:
        raise ValueError("both sets must be nonempty")
    if sa & sb:
        raise ValueError("sets must be disjoint")
    crossing = sum(1 for u, v in g.edges if (u in sa and v in sb) or (u in sb and v in sa))
    if crossing:
        raise ValueError(f"e(A, B) = {crossing} != 0; bound requires no crossing edges")
    return min(average_degree(g, sa), average_degree(g, sb))
