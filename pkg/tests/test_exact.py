from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treepack.exact import (
    IntPoly,
    cauchy_bound,
    char_poly_exact,
    char_poly_rational,
    clear_denominators,
    count_real_roots,
    descartes_positivity_check,
    det_exact,
    isolate_real_roots,
    squarefree_decomposition,
    squarefree_part,
    sturm_isolate_largest_root,
)

ints = st.integers(min_value=-50, max_value=50)
small_polys = st.lists(ints, min_size=1, max_size=6).map(IntPoly)


def poly_from_roots(roots):
    p = IntPoly([1])
    for r in roots:
        p = p * IntPoly([-r, 1])
    return p


class TestIntPoly:
    def test_trims_trailing_zeros(self):
        assert IntPoly([1, 2, 0, 0]) == IntPoly([1, 2])
        assert IntPoly([0, 0]).is_zero
        assert IntPoly([0]).degree == -1

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            IntPoly([1.5, 2])

    def test_arithmetic(self):
        x = IntPoly([0, 1])
        assert (x + IntPoly([1])) * (x - IntPoly([1])) == x * x - IntPoly([1])
        assert 3 * x == IntPoly([0, 3])
        assert x ** 3 == IntPoly([0, 0, 0, 1])

    def test_evaluate(self):
        p = IntPoly([2, 0, 1])  # x^2 + 2
        assert p.evaluate_at(3) == 11
        assert p.evaluate_at(Fraction(1, 2)) == Fraction(9, 4)

    @settings(max_examples=100, deadline=None)
    @given(small_polys, small_polys)
    def test_derivative_product_rule(self, p, q):
        lhs = (p * q).derivative()
        rhs = p.derivative() * q + p * q.derivative()
        assert lhs == rhs

    @settings(max_examples=100, deadline=None)
    @given(small_polys, small_polys, st.fractions())
    def test_mul_evaluates_pointwise(self, p, q, x):
        assert (p * q).evaluate_at(x) == p.evaluate_at(x) * q.evaluate_at(x)


class TestCharPoly:
    @settings(max_examples=100, deadline=None)
    @given(ints, ints, ints, ints)
    def test_two_by_two(self, a, b, c, d):
        p = char_poly_exact([[a, b], [c, d]])
        assert p == IntPoly([a * d - b * c, -(a + d), 1])

    def test_identity_matrix(self):
        p = char_poly_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert p == IntPoly([-1, 1]) ** 3

    def test_companion_matrix(self):
        # companion of x^3 - 2x^2 + 5x - 7
        m = [[0, 0, 7], [1, 0, -5], [0, 1, 2]]
        assert char_poly_exact(m) == IntPoly([-7, 5, -2, 1])

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=1, max_value=4).flatmap(
        lambda n: st.lists(st.lists(ints, min_size=n, max_size=n),
                           min_size=n, max_size=n)))
    def test_rational_route_agrees(self, rows):
        exact = char_poly_exact(rows)
        rational = char_poly_rational([[Fraction(x) for x in row] for row in rows])
        assert clear_denominators(rational) == exact


class TestDeterminant:
    def test_known_values(self):
        assert det_exact([[5]]) == 5
        assert det_exact([[1, 2], [3, 4]]) == -2
        assert det_exact([[0, 1], [1, 0]]) == -1   # needs a row swap
        assert det_exact([[1, 2], [2, 4]]) == 0

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.lists(ints, min_size=3, max_size=3), min_size=3, max_size=3))
    def test_matches_cofactor_expansion(self, m):
        (a, b, c), (d, e, f), (g, h, i) = m
        expected = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        assert det_exact(m) == expected

    def test_determinant_constant_term_of_char_poly(self):
        m = [[2, 7, 1], [0, 3, -4], [5, 5, 5]]
        p = char_poly_exact(m)
        # p(0) = det(-M) = (-1)^3 det(M)
        assert p.evaluate_at(0) == -det_exact(m)


def test_squarefree_decomposition():
    p = poly_from_roots([1, 1, -2])          # (x-1)^2 (x+2)
    layers = squarefree_decomposition(p)
    assert (IntPoly([2, 1]), 1) in layers
    assert (IntPoly([-1, 1]), 2) in layers
    assert squarefree_part(p) == poly_from_roots([1, -2]).primitive()


class TestSturm:
    def test_count_half_open_semantics(self):
        p = poly_from_roots([1, 2, 3])
        assert count_real_roots(p, Fraction(0), Fraction(3)) == 3
        assert count_real_roots(p, Fraction(1), Fraction(3)) == 2   # lo excluded
        assert count_real_roots(p, Fraction(1), Fraction(2)) == 1   # hi included
        assert count_real_roots(p, Fraction(3), Fraction(10)) == 0

    def test_counts_repeated_roots_once(self):
        p = poly_from_roots([2, 2, 5])
        assert count_real_roots(p, Fraction(0), Fraction(10)) == 2

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.integers(min_value=-8, max_value=8), min_size=1, max_size=4),
           st.integers(min_value=-9, max_value=9),
           st.integers(min_value=-9, max_value=9))
    def test_count_matches_known_roots(self, roots, a, b):
        if a == b:
            return
        lo, hi = (Fraction(min(a, b)), Fraction(max(a, b)))
        p = poly_from_roots(roots)
        expected = len({r for r in roots if lo < r <= hi})
        assert count_real_roots(p, lo, hi) == expected

    def test_cauchy_bound_exceeds_roots(self):
        p = poly_from_roots([3, -7, 11])
        b = cauchy_bound(p)
        assert b > 11 and -b < -7


class TestRootIsolation:
    def test_sqrt2(self):
        p = IntPoly([-2, 0, 1])
        iso = sturm_isolate_largest_root(p, Fraction(1, 10 ** 15))
        assert abs(iso.as_float() - 2 ** 0.5) < 1e-14

    def test_exact_rational_root(self):
        p = poly_from_roots([4])
        iso = sturm_isolate_largest_root(p, Fraction(1, 10 ** 12))
        assert iso.lo <= 4 <= iso.hi

    def test_no_real_root_raises(self):
        with pytest.raises(ValueError):
            sturm_isolate_largest_root(IntPoly([1, 0, 1]), Fraction(1, 100))

    def test_isolate_with_multiplicities(self):
        p = poly_from_roots([1, 1, -3])
        found = isolate_real_roots(p, Fraction(1, 10 ** 9))
        assert len(found) == 2
        (i1, m1), (i2, m2) = found
        assert m1 == 1 and abs(i1.as_float() + 3) < 1e-8
        assert m2 == 2 and abs(i2.as_float() - 1) < 1e-8

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=4))
    def test_isolation_covers_all_roots(self, roots):
        p = poly_from_roots(roots)
        found = isolate_real_roots(p, Fraction(1, 10 ** 9))
        assert sum(mult for _, mult in found) == len(roots)
        recovered = sorted(iv.as_float() for iv, _ in found for _ in range(1))
        for r in sorted(set(roots)):
            assert any(abs(r - x) < 1e-8 for x in recovered)


def test_descartes_positivity():
    p = IntPoly([-6, 11, -6, 1])    # (x-1)(x-2)(x-3)
    report = descartes_positivity_check(p, 4)
    assert report.all_positive
    assert report.values[0] == 6    # p(4)
    assert not descartes_positivity_check(p, 0).all_positive
    # all derivatives positive at a point implies no roots at or beyond it
    assert count_real_roots(p, Fraction(4), cauchy_bound(p)) == 0
