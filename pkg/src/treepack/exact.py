"""Exact integer/rational polynomial arithmetic and real-root location.

The workhorses are:

* ``IntPoly`` — integer-coefficient univariate polynomials (ascending
  coefficient order, trailing zeros trimmed);
* ``char_poly_exact`` — Faddeev-LeVerrier over exact integers;
* ``det_exact`` — Bareiss fraction-free determinant;
* Sturm sequences over ``Fraction`` for exact root counting, interval
  isolation of the largest real root, and full real-root isolation with
  multiplicities;
* ``descartes_positivity_check`` — exact sign report for p, p', ..., p^(deg)
  at a rational point.

Rational scalars are plain ``fractions.Fraction`` values (always reduced,
positive denominator), re-exported as ``RatScalar``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

RatScalar = Fraction


class IntPoly:
    """Integer-coefficient polynomial; coeffs[i] is the x^i coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
        self.coeffs: tuple[int, ...] = tuple(cs)

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        out = IntPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate_at(self, x: Fraction | int) -> Fraction:
        """Exact Horner evaluation, always returned as a reduced Fraction."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPoly":
        """Divide out the content; sign normalized so the leading coeff is positive."""
        if self.is_zero():
            return self
        g = self.content()
        sign = 1 if self.leading() > 0 else -1
        return IntPoly([sign * c // g for c in self.coeffs])


def poly_x() -> IntPoly:
    return IntPoly([0, 1])


def poly_const(c: int) -> IntPoly:
    return IntPoly([c])


# ---------------------------------------------------------------------------
# Exact linear algebra on integer matrices
# ---------------------------------------------------------------------------

def _check_square_int(m: Sequence[Sequence[int]]) -> list[list[int]]:
    rows = [list(r) for r in m]
    dim = len(rows)
    for r in rows:
        if len(r) != dim:
            raise ValueError("matrix is not square")
        for x in r:
            if not isinstance(x, int):
                # numpy int64 etc. are fine once converted; reject floats
                if hasattr(x, "item") and isinstance(x.item(), int):
                    continue
                raise ValueError("integer entries required")
    return [[int(x) for x in r] for r in rows]


def char_poly_exact(m: Sequence[Sequence[int]]) -> IntPoly:
    """Monic characteristic polynomial det(xI - M) via Faddeev-LeVerrier.

    All divisions are exact integer divisions; O(dim^4) big-int work,
    which is irrelevant at the dimensions used here (<= 25).
    """
    a = _check_square_int(m)
    dim = len(a)
    if dim == 0:
        return IntPoly([1])
    # coeffs[dim] = 1, coeffs[dim - k] = c_k from the recurrence
    coeffs = [0] * (dim + 1)
    coeffs[dim] = 1
    mk = [row[:] for row in a]
    for k in range(1, dim + 1):
        if k > 1:
            # mk <- a @ (mk_prev + c_{k-1} I)
            prev = mk
            ck_prev = coeffs[dim - (k - 1)]
            shifted = [row[:] for row in prev]
            for i in range(dim):
                shifted[i][i] += ck_prev
            mk = [
                [sum(a[i][l] * shifted[l][j] for l in range(dim)) for j in range(dim)]
                for i in range(dim)
            ]
        trace = sum(mk[i][i] for i in range(dim))
        q, r = divmod(-trace, k)
        assert r == 0, "Faddeev-LeVerrier trace division must be exact"
        coeffs[dim - k] = q
    return IntPoly(coeffs)


def char_poly_rational(m: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Monic char poly of a rational matrix; ascending Fraction coefficients.

    Same Faddeev-LeVerrier recurrence as the integer version, run over
    Fraction.  Used for quotient matrices whose entries are e_ij / n_i.
    """
    rows = [[Fraction(x) for x in r] for r in m]
    dim = len(rows)
    for r in rows:
        if len(r) != dim:
            raise ValueError("matrix is not square")
    coeffs = [Fraction(0)] * (dim + 1)
    coeffs[dim] = Fraction(1)
    mk = [row[:] for row in rows]
    for k in range(1, dim + 1):
        if k > 1:
            ck_prev = coeffs[dim - (k - 1)]
            shifted = [row[:] for row in mk]
            for i in range(dim):
                shifted[i][i] += ck_prev
            mk = [
                [
                    sum(rows[i][l] * shifted[l][j] for l in range(dim))
                    for j in range(dim)
                ]
                for i in range(dim)
            ]
        trace = sum(mk[i][i] for i in range(dim))
        coeffs[dim - k] = -trace / k
    return coeffs


def clear_denominators(coeffs: Sequence[Fraction]) -> IntPoly:
    """Scale rational coefficients by their lcm of denominators -> IntPoly."""
    fracs = [Fraction(c) for c in coeffs]
    lcm = 1
    for c in fracs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    return IntPoly([int(c * lcm) for c in fracs])


def det_exact(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    a = _check_square_int(m)
    dim = len(a)
    if dim == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(dim - 1):
        if a[k][k] == 0:
            for i in range(k + 1, dim):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, dim):
            for j in range(k + 1, dim):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[dim - 1][dim - 1]


# ---------------------------------------------------------------------------
# Sturm sequences over Fraction
# ---------------------------------------------------------------------------
# Internal representation for this section: list[Fraction], ascending order.

def _rp(p: IntPoly) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _rp_trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _rp_eval(c: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _rp_rem(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = num[:]
    dd = len(den) - 1
    lead = den[-1]
    while len(num) - 1 >= dd and num:
        k = len(num) - 1 - dd
        q = num[-1] / lead
        for i in range(len(den)):
            num[k + i] -= q * den[i]
        num.pop()
        _rp_trim(num)
    return num


def _rp_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = a[:], b[:]
    while b:
        a, b = b, _rp_rem(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def squarefree_part(p: IntPoly) -> IntPoly:
    """p / gcd(p, p'), as a primitive IntPoly with positive leading coefficient."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return IntPoly([1])
    g = _rp_gcd(_rp(p), _rp(p.derivative()))
    if len(g) == 1:
        return p.primitive()
    # exact division p // g over Fraction
    num = _rp(p)
    dd = len(g) - 1
    out = [Fraction(0)] * (len(num) - dd)
    while len(num) - 1 >= dd and num:
        k = len(num) - 1 - dd
        q = num[-1] / g[-1]
        out[k] = q
        for i in range(len(g)):
            num[k + i] -= q * g[i]
        num.pop()
        _rp_trim(num)
    assert not num, "squarefree division must be exact"
    return clear_denominators(out).primitive()


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun-style decomposition: p = c * prod q_i^i with each q_i squarefree.

    Returns the nonconstant (q_i, i) factors.  Used to recover eigenvalue
    multiplicities from characteristic polynomials.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    out: list[tuple[IntPoly, int]] = []
    work = p.primitive()
    mult = 1
    while work.degree > 0:
        sf = squarefree_part(work)
        # factor appearing with multiplicity >= mult is sf; peel one layer:
        # q = work / sf has exactly the factors of multiplicity >= 2 in work.
        q = _poly_div_exact(work, sf)
        # factors exactly at this multiplicity: sf / squarefree_part-of-q's-support
        layer = _poly_div_exact(sf, _rp_gcd_intpoly(sf, q))
        if layer.degree > 0:
            out.append((layer, mult))
        work = q
        mult += 1
    return out


def _rp_gcd_intpoly(a: IntPoly, b: IntPoly) -> IntPoly:
    if b.is_zero():
        return a.primitive()
    g = _rp_gcd(_rp(a), _rp(b))
    return clear_denominators(g).primitive()


def _poly_div_exact(num: IntPoly, den: IntPoly) -> IntPoly:
    nc = _rp(num)
    dc = _rp(den)
    dd = len(dc) - 1
    out = [Fraction(0)] * max(len(nc) - dd, 0)
    while len(nc) - 1 >= dd and nc:
        k = len(nc) - 1 - dd
        q = nc[-1] / dc[-1]
        out[k] = q
        for i in range(len(dc)):
            nc[k + i] -= q * dc[i]
        nc.pop()
        _rp_trim(nc)
    assert not nc, "exact polynomial division expected"
    return clear_denominators(out).primitive()


def sturm_chain(p: IntPoly) -> list[list[Fraction]]:
    """Sturm chain of the squarefree part of p."""
    sf = squarefree_part(p)
    chain = [_rp(sf), _rp(sf.derivative())]
    while len(chain[-1]) > 1:
        rem = _rp_rem(chain[-2][:], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    if chain[-1] == []:
        chain.pop()
    return chain


def _sign_variations(chain: Sequence[Sequence[Fraction]], x: Fraction) -> int:
    signs = []
    for c in chain:
        v = _rp_eval(c, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(p: IntPoly) -> Fraction:
    """B with every real root of p in (-B, B): 1 + max |a_i| / |lead|."""
    if p.is_zero() or p.degree == 0:
        raise ValueError("nonconstant polynomial required")
    lead = abs(p.leading())
    top = max(abs(c) for c in p.coeffs[:-1]) if p.degree > 0 else 0
    return 1 + Fraction(top, lead)


def count_real_roots(p: IntPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    Requires lo < hi.  Multiplicities are ignored (the chain starts from
    the squarefree part).  Endpoint roots: a root exactly at hi counts,
    a root exactly at lo does not — the classical Sturm convention.
    """
    if not lo < hi:
        raise ValueError("need lo < hi")
    chain = sturm_chain(p)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


@dataclass(frozen=True)
class RootInterval:
    """Rational interval [lo, hi] isolating one real root (lo == hi when exact)."""

    lo: Fraction
    hi: Fraction

    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def as_float(self) -> float:
        return float(self.midpoint())


DEFAULT_PRECISION = Fraction(1, 10**12)


def sturm_isolate_largest_root(
    p: IntPoly, precision: Fraction = DEFAULT_PRECISION
) -> RootInterval:
    """Interval of width <= precision containing the largest real root of p.

    Bisection with exact Sturm counts; endpoints stay rational throughout.
    Raises if p has no real root.
    """
    if p.is_zero() or p.degree == 0:
        raise ValueError("nonconstant polynomial required")
    sf = squarefree_part(p)
    chain = sturm_chain(sf)
    bound = cauchy_bound(sf)
    lo, hi = -bound, bound
    if _sign_variations(chain, lo) - _sign_variations(chain, hi) == 0:
        raise ValueError("polynomial has no real root")
    # invariant: largest root lies in (lo, hi]
    while hi - lo > precision:
        mid = (lo + hi) / 2
        if _rp_eval(chain[0], mid) == 0:
            # mid is a root; it is the largest iff no roots remain above it
            if _sign_variations(chain, mid) - _sign_variations(chain, hi) == 0:
                return RootInterval(mid, mid)
            lo = mid
            continue
        if _sign_variations(chain, mid) - _sign_variations(chain, hi) > 0:
            lo = mid
        else:
            hi = mid
    return RootInterval(lo, hi)


def isolate_real_roots(
    p: IntPoly, precision: Fraction = DEFAULT_PRECISION
) -> list[tuple[RootInterval, int]]:
    """All real roots of p with multiplicities, ascending by root.

    Each root comes back as a (RootInterval, multiplicity) pair; every
    interval has width <= precision.
    """
    if p.is_zero() or p.degree == 0:
        raise ValueError("nonconstant polynomial required")
    found: list[tuple[Fraction, Fraction, int]] = []
    for factor, mult in squarefree_decomposition(p):
        chain = sturm_chain(factor)
        bound = cauchy_bound(factor)

        def refine(lo: Fraction, hi: Fraction, count: int):
            # count = number of roots of `factor` in (lo, hi]
            if count == 0:
                return
            if count == 1:
                while hi - lo > precision:
                    mid = (lo + hi) / 2
                    if _rp_eval(chain[0], mid) == 0:
                        lo = hi = mid
                        break
                    if _sign_variations(chain, mid) - _sign_variations(chain, hi) == 1:
                        lo = mid
                    else:
                        hi = mid
                found.append((lo, hi, mult))
                return
            mid = (lo + hi) / 2
            upper = _sign_variations(chain, mid) - _sign_variations(chain, hi)
            refine(lo, mid, count - upper)
            refine(mid, hi, upper)

        total = _sign_variations(chain, -bound) - _sign_variations(chain, bound)
        refine(-bound, bound, total)
    found.sort(key=lambda item: item[0])
    return [(RootInterval(lo, hi), mult) for lo, hi, mult in found]


@dataclass(frozen=True)
class PositivityReport:
    """Exact signs of p^(n)(point) for n = 0..deg(p)."""

    point: Fraction
    values: tuple[Fraction, ...]     # values[n] = p^(n)(point)
    all_positive: bool


def descartes_positivity_check(p: IntPoly, point: Fraction | int) -> PositivityReport:
    """True iff every derivative p^(n) is strictly positive at the point.

    When this holds, the shifted polynomial p(x + point) has no sign
    changes, so by Descartes' rule p has no root above the point.
    """
    pt = Fraction(point)
    values = []
    cur = p
    for _ in range(p.degree + 1):
        values.append(cur.evaluate_at(pt))
        cur = cur.derivative()
    return PositivityReport(pt, tuple(values), all(v > 0 for v in values))
