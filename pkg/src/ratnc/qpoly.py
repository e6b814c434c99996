"""Integer polynomials in q, q-analogs, and exact evaluation at roots of unity.

Roots of unity never appear as complex numbers: a value X(zeta^e) with zeta a
primitive m-th root is the class of X(q^e) in Z[q]/(Phi_m), and it is a rational
integer exactly when that class has degree 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NonDivisible, NotInteger


def _trim(coeffs: Iterable[int]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class QPolynomial:
    coeffs: tuple  # ascending powers of q; zero polynomial is ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(x) for x in self.coeffs))

    @classmethod
    def const(cls, c: int) -> "QPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPolynomial":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if self.is_zero() or other.is_zero():
            return QPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return QPolynomial(out)

    def divmod(self, other: "QPolynomial") -> tuple:
        """Integer long division; raises NonDivisible if a quotient coefficient is not integral."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = other.degree
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            t, r = divmod(c, lead)
            if r:
                raise NonDivisible(f"leading coefficient {lead} does not divide {c}")
            quot[k - dq] = t
            for j, y in enumerate(other.coeffs):
                rem[k - dq + j] -= t * y
        return QPolynomial(quot), QPolynomial(rem)

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise NonDivisible(f"nonzero remainder {r.coeffs}")
        return q

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if k == 0 else f"{c}*q^{k}")
        return " + ".join(terms)


ONE = QPolynomial((1,))


def q_int(n: int) -> QPolynomial:
    """[n]_q = 1 + q + ... + q^{n-1}."""
    return QPolynomial((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPolynomial:
    if n < 0:
        raise ValueError("negative factorial")
    return ONE if n == 0 else q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial via the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if k < 0 or k > n:
        return QPolynomial(())
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + QPolynomial.monomial(k) * q_binomial(n - 1, k)


def q_catalan(a: int, b: int) -> QPolynomial:
    return q_binomial(a + b, a).exact_div(q_int(a + b))


def q_narayana(a: int, b: int, k: int) -> QPolynomial:
    return (q_binomial(a, k) * q_binomial(b - 1, k - 1)).exact_div(q_int(a))


def q_kreweras(a: int, b: int, r: Sequence[int]) -> QPolynomial:
    """``r[i-1]`` is the number of blocks of rank i; zero when there are more than b blocks."""
    if len(r) != a or sum((i + 1) * x for i, x in enumerate(r)) != a or min(r, default=0) < 0:
        raise ValueError(f"{tuple(r)} is not a rank profile of {a}")
    k = sum(r)
    if k > b:
        return QPolynomial(())
    den = q_factorial(b - k)
    for x in r:
        den = den * q_factorial(x)
    return q_factorial(b - 1).exact_div(den)


def rank_profiles(a: int) -> list:
    """All (r_1..r_a) with sum i*r_i = a, in reverse-lexicographic order of partitions."""
    out = []

    def rec(rem, largest, counts):
        if rem == 0:
            out.append(tuple(counts))
            return
        for part in range(min(rem, largest), 0, -1):
            counts[part - 1] += 1
            rec(rem - part, part, counts)
            counts[part - 1] -= 1

    rec(a, a, [0] * a)
    return out


# -- cyclotomic polynomials ---------------------------------------------------

def _divisors(m: int) -> list:
    return [d for d in range(1, m + 1) if m % d == 0]


def _mobius(n: int) -> int:
    res, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            res = -res
        p += 1
    return -res if n > 1 else res


def _q_power_minus_one(d: int) -> QPolynomial:
    return QPolynomial((-1,) + (0,) * (d - 1) + (1,))


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> QPolynomial:
    """Phi_m as prod_{d|m} (q^d - 1)^{mu(m/d)}."""
    num, den = ONE, ONE
    for d in _divisors(m):
        mu = _mobius(m // d)
        if mu == 1:
            num = num * _q_power_minus_one(d)
        elif mu == -1:
            den = den * _q_power_minus_one(d)
    return num.exact_div(den)


@lru_cache(maxsize=None)
def cyclotomic_by_division(m: int) -> QPolynomial:
    """Phi_m as (q^m - 1) divided by Phi_d for every proper divisor d."""
    p = _q_power_minus_one(m)
    for d in _divisors(m)[:-1]:
        p = p.exact_div(cyclotomic_by_division(d))
    return p


@dataclass(frozen=True)
class CycValue:
    """An element of Z[q]/(Phi_m), stored as the reduced remainder."""

    m: int
    residues: tuple  # length phi(m), ascending powers

    def is_integer(self) -> bool:
        return all(x == 0 for x in self.residues[1:])

    def as_int(self) -> int:
        if not self.is_integer():
            raise NotInteger(f"class {self.residues} mod Phi_{self.m} is not an integer")
        return self.residues[0] if self.residues else 0


def _fold(X: QPolynomial, m: int, e: int) -> QPolynomial:
    vec = [0] * m
    for k, c in enumerate(X.coeffs):
        vec[(e * k) % m] += c
    return QPolynomial(vec)


def reduce_at_root(X: QPolynomial, m: int, e: int = 1) -> CycValue:
    """Class of X(zeta^e), zeta a primitive m-th root of unity."""
    if m < 1:
        raise ValueError("root order must be positive")
    phi = cyclotomic(m)
    _, r = _fold(X, m, e).divmod(phi)
    res = r.coeffs + (0,) * (phi.degree - len(r.coeffs))
    return CycValue(m, res)


def eval_at_root(X: QPolynomial, m: int, e: int = 1) -> int:
    return reduce_at_root(X, m, e).as_int()


def eval_at_root_alt(X: QPolynomial, m: int, e: int = 1) -> int:
    """Same value computed at the primitive root zeta^e of order m/gcd(m,e)."""
    order = m // math.gcd(m, e % m) if e % m else 1
    phi = cyclotomic_by_division(order)
    _, r = _fold(X, order, 1).divmod(phi)
    v = CycValue(order, r.coeffs + (0,) * (phi.degree - len(r.coeffs)))
    return v.as_int()
