"""Table-driven arithmetic in F_q, q = p^m <= 256.

Elements are the integers 0..q-1; the integer sum(c_i p^i) stands for the
residue class of the polynomial sum(c_i x^i) modulo the defining modulus.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import InputError, NonPrime, Reducible, SizeExceeded

MAX_ORDER = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# --- polynomials over F_p: coefficient lists, constant term first ---------


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_rem(a, b, p):
    """Remainder of a modulo b over F_p. b must have a nonzero leading term."""
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        a = _trim(a)
    return a


def monic_polys(p: int, degree: int):
    """All monic polynomials of a given degree, lexicographic with c_0 first."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def irreducible_factor(poly, p):
    """Return a monic factor of degree <= deg/2, or None when irreducible."""
    n = len(_trim(poly)) - 1
    for d in range(1, n // 2 + 1):
        for g in monic_polys(p, d):
            if not poly_rem(poly, g, p):
                return g
    return None


def smallest_irreducible(p: int, m: int):
    for f in monic_polys(p, m):
        if irreducible_factor(f, p) is None:
            return f
    raise AssertionError(f"no irreducible polynomial of degree {m} over F_{p}")


# --- the field -------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FiniteField:
    p: int
    m: int
    modulus: tuple
    add_table: np.ndarray = field(repr=False)
    mul_table: np.ndarray = field(repr=False)
    neg_table: np.ndarray = field(repr=False)
    inv_table: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.m

    @property
    def name(self) -> str:
        return f"F_{self.q}"

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    def __repr__(self):
        return f"FiniteField(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    def add(self, a, b):
        return self.add_table[a, b]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add_table[a, self.neg_table[b]]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("zero has no inverse")
        return self.inv_table[a]

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_q."""
        return n % self.p

    def sum(self, arr, axis):
        """Field sum of arr along axis, vectorised."""
        arr = np.asarray(arr, dtype=np.int64)
        if self.m == 1:
            return arr.sum(axis=axis) % self.p
        powers = self.p ** np.arange(self.m, dtype=np.int64)
        digits = (arr[..., None] // powers) % self.p
        s = digits.sum(axis=axis) % self.p
        return s @ powers

    def check_axioms(self):
        """Exhaustive field-axiom check; returns a list of failed axiom names."""
        q = self.q
        A, M = self.add_table.astype(np.int64), self.mul_table.astype(np.int64)
        a = np.arange(q)
        failed = []
        if not (np.array_equal(A, A.T) and np.array_equal(M, M.T)):
            failed.append("commutativity")
        if not np.array_equal(A[A[:, :, None], a[None, None, :]],
                              A[a[:, None, None], A[None, :, :]]):
            failed.append("additive associativity")
        if not np.array_equal(M[M[:, :, None], a[None, None, :]],
                              M[a[:, None, None], M[None, :, :]]):
            failed.append("multiplicative associativity")
        left = M[a[:, None, None], A[None, :, :]]
        right = A[M[:, :, None], M[:, None, :]]
        if not np.array_equal(left, right):
            failed.append("distributivity")
        if not (np.array_equal(A[0], a) and np.array_equal(M[1], a) and np.all(M[0] == 0)):
            failed.append("identities")
        if not np.all(A[a, self.neg_table] == 0):
            failed.append("additive inverse")
        if not np.all(M[a[1:], self.inv_table[1:]] == 1):
            failed.append("multiplicative inverse")
        return failed


def _tables(p, m, modulus):
    q = p ** m
    a = np.arange(q)
    if m == 1:
        add = (a[:, None] + a[None, :]) % p
        mul = (a[:, None] * a[None, :]) % p
    else:
        powers = p ** np.arange(m)
        digits = (a[:, None] // powers) % p  # (q, m)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ powers
        prod = np.zeros((q, q, 2 * m - 1), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                prod[:, :, i + j] += digits[:, None, i] * digits[None, :, j]
        prod %= p
        # x^m = -(c_0 + ... + c_{m-1} x^{m-1}); modulus is monic
        for top in range(2 * m - 2, m - 1, -1):
            coef = prod[:, :, top].copy()
            prod[:, :, top] = 0
            for i in range(m):
                prod[:, :, top - m + i] -= coef * modulus[i]
            prod %= p
        mul = prod[:, :, :m] @ powers
    neg = np.argmax(add == 0, axis=1)
    inv = np.zeros(q, dtype=np.int64)
    inv[1:] = np.argmax(mul[1:] == 1, axis=1)
    dtype = np.int16
    return add.astype(dtype), mul.astype(dtype), neg.astype(dtype), inv.astype(dtype)


@lru_cache(maxsize=None)
def _make_field(p, m, modulus):
    add, mul, neg, inv = _tables(p, m, modulus)
    for t in (add, mul, neg, inv):
        t.setflags(write=False)
    F = FiniteField(p, m, modulus, add, mul, neg, inv)
    failed = F.check_axioms()
    if failed:
        raise AssertionError(f"{F!r} fails field axioms: {failed}")
    return F


def make_field(p: int, m: int = 1, modulus=None) -> FiniteField:
    """Build F_{p^m}; the modulus defaults to the smallest monic irreducible."""
    if not is_prime(p):
        raise NonPrime(p)
    if m < 1:
        raise InputError(f"extension degree must be >= 1, got {m}")
    if p ** m > MAX_ORDER:
        raise SizeExceeded(p ** m, MAX_ORDER)
    if modulus is None:
        modulus = smallest_irreducible(p, m)
    else:
        modulus = [int(c) for c in modulus]
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise InputError(f"modulus must be monic of degree {m}, got {modulus}")
        if any(not 0 <= c < p for c in modulus):
            raise InputError(f"modulus coefficients must lie in [0, {p})")
        factor = irreducible_factor(modulus, p)
        if factor is not None:
            raise Reducible(modulus, factor)
    return _make_field(p, m, tuple(modulus))
