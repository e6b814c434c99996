from __future__ import annotations

import cmath
import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from oracles import coprime_pairs
from ratnc.errors import NonDivisible, NotInteger
from ratnc.paths import catalan
from ratnc.qpoly import (
    ONE,
    QPolynomial,
    cyclotomic,
    cyclotomic_by_division,
    eval_at_root,
    eval_at_root_alt,
    q_binomial,
    q_catalan,
    q_factorial,
    q_int,
    q_kreweras,
    q_narayana,
    rank_profiles,
)

q = sympy.Symbol("q")


def to_sympy(X: QPolynomial):
    return sum(c * q**k for k, c in enumerate(X.coeffs))


def from_sympy(expr) -> QPolynomial:
    return QPolynomial(reversed(sympy.Poly(sympy.expand(expr), q).all_coeffs()))


polys = st.lists(st.integers(-5, 5), max_size=8).map(QPolynomial)


@given(polys, polys)
def test_ring_operations_match_sympy(X, Y):
    if not (X * Y).is_zero():
        assert from_sympy(to_sympy(X) * to_sympy(Y)) == X * Y
    assert (X + Y) - Y == X
    assert (X * Y)(2) == X(2) * Y(2)


@given(polys, polys.filter(lambda P: not P.is_zero() and abs(P.coeffs[-1]) == 1))
def test_division_by_monic_recovers_product(X, Y):
    assert (X * Y).exact_div(Y) == X
    quo, rem = X.divmod(Y)
    assert quo * Y + rem == X
    assert rem.degree < Y.degree


def test_division_errors():
    with pytest.raises(NonDivisible):
        QPolynomial((1, 1)).exact_div(QPolynomial((1, 1, 1)))
    with pytest.raises(NonDivisible):
        QPolynomial((1, 1)).divmod(QPolynomial((0, 2)))
    with pytest.raises(ZeroDivisionError):
        ONE.divmod(QPolynomial(()))


@pytest.mark.parametrize("n", range(0, 9))
def test_q_binomials_match_sympy(n):
    for k in range(n + 1):
        expr = sympy.prod([(1 - q ** (n - i)) for i in range(k)]) / sympy.prod([(1 - q ** (i + 1)) for i in range(k)])
        assert q_binomial(n, k) == from_sympy(sympy.cancel(expr))
        assert q_binomial(n, k)(1) == math.comb(n, k)
    assert q_factorial(n)(1) == math.factorial(n)
    assert q_int(n)(1) == n


@pytest.mark.parametrize("m", range(1, 25))
def test_cyclotomic_polynomials(m):
    expect = QPolynomial(reversed(sympy.Poly(sympy.cyclotomic_poly(m, q), q).all_coeffs()))
    assert cyclotomic(m) == cyclotomic_by_division(m) == expect


def all_pairs():
    return list(coprime_pairs(13))


@pytest.mark.parametrize("a,b", all_pairs())
def test_q_analogs_are_polynomials_with_the_right_values(a, b):
    C = q_catalan(a, b)
    assert min(C.coeffs) >= 0
    assert C(1) == catalan(a, b)
    assert C.degree == (a - 1) * (b - 1)
    narayana = [q_narayana(a, b, k) for k in range(1, a + 1)]
    assert all(min(N.coeffs, default=0) >= 0 for N in narayana)
    assert sum(N(1) for N in narayana) == catalan(a, b)
    kreweras = [q_kreweras(a, b, r) for r in rank_profiles(a)]
    assert all(min(K.coeffs, default=0) >= 0 for K in kreweras)
    assert sum(K(1) for K in kreweras) == catalan(a, b)


def test_q_kreweras_rejects_bad_profiles():
    with pytest.raises(ValueError):
        q_kreweras(4, 3, (1, 1, 0, 0))
    assert q_kreweras(4, 3, (4, 0, 0, 0)).is_zero()


def test_rank_profiles_count_partitions():
    assert [len(rank_profiles(n)) for n in range(1, 11)] == [int(sympy.partition(n)) for n in range(1, 11)]


def test_evaluation_examples():
    C = q_catalan(3, 5)
    assert eval_at_root(C, 4, 0) == 7
    assert eval_at_root(C, 4, 1) == 1
    assert eval_at_root(q_catalan(10, 7), 6, 3) == 56
    with pytest.raises(NotInteger):
        eval_at_root(QPolynomial((0, 1)), 3)
    with pytest.raises(ValueError):
        eval_at_root(ONE, 0)


@pytest.mark.parametrize("a,b", [(3, 5), (7, 4), (10, 7), (5, 11), (12, 7)])
def test_evaluation_two_ways_and_numerically(a, b):
    C = q_catalan(a, b)
    m = b - 1
    for e in range(m):
        v = eval_at_root(C, m, e)
        assert v == eval_at_root_alt(C, m, e)
        z = cmath.exp(2j * math.pi * e / m)
        approx = sum(c * z**k for k, c in enumerate(C.coeffs))
        assert abs(approx - v) < 1e-6 * max(1, abs(v))
