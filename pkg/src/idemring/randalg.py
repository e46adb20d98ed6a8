"""Random associative unital algebras over small prime fields.

Random structure constants are almost never associative, so the generators
start from families that are associative by construction (group algebras,
incidence algebras of posets, truncated polynomial quotients, direct sums)
and then scramble the basis with a random invertible change of basis.
Every result goes through ``verify_ring_axioms`` before it is returned.
"""
from __future__ import annotations

import itertools

import numpy as np

from .errors import InputError, NotARing
from .field import FiniteField, make_field, poly_rem
from .linalg import inverse
from .rings import (
    StructureConstantAlgebra,
    build_group_algebra,
    build_incidence_algebra,
    verify_ring_axioms,
)

MAX_SIZE = 4096


# -- small groups as Cayley tables with identity at 0 ------------------------


def cyclic(n):
    a = np.arange(n)
    return (a[:, None] + a[None, :]) % n


def direct_product(t1, t2):
    n1, n2 = len(t1), len(t2)
    out = np.empty((n1 * n2, n1 * n2), dtype=np.int64)
    for a, b, c, d in itertools.product(range(n1), range(n2), range(n1), range(n2)):
        out[a * n2 + b, c * n2 + d] = t1[a][c] * n2 + t2[b][d]
    return out


def permutation_group(gens):
    """Cayley table of the group generated by permutations (tuples), identity first."""
    n = len(gens[0])
    ident = tuple(range(n))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = tuple(g[h[i]] for i in range(n))
                if gh not in seen:
                    seen.add(gh)
                    elems.append(gh)
                    nxt.append(gh)
        frontier = nxt
    pos = {g: i for i, g in enumerate(elems)}
    return np.array([[pos[tuple(g[h[i]] for i in range(n))] for h in elems] for g in elems], dtype=np.int64)


def quaternion_group():
    # units 1, i, j, k with signs; element index = 4*sign_bit + unit
    basis = {(0, 0): (1, 0), (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
             (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
             (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2)}
    for a in range(4):
        basis[(0, a)] = (1, a)
        basis[(a, 0)] = (1, a)
    out = np.empty((8, 8), dtype=np.int64)
    for x in range(8):
        for y in range(8):
            sign, unit = basis[(x % 4, y % 4)]
            neg = (x // 4) ^ (y // 4) ^ (sign < 0)
            out[x, y] = 4 * neg + unit
    return out


def small_groups():
    groups = {f"C{n}": cyclic(n) for n in range(1, 13)}
    groups["C2xC2"] = direct_product(cyclic(2), cyclic(2))
    groups["C2xC4"] = direct_product(cyclic(2), cyclic(4))
    groups["C2xC2xC2"] = direct_product(groups["C2xC2"], cyclic(2))
    groups["C3xC3"] = direct_product(cyclic(3), cyclic(3))
    groups["C2xC6"] = direct_product(cyclic(2), cyclic(6))
    groups["S3"] = permutation_group([(1, 0, 2), (1, 2, 0)])
    groups["D4"] = permutation_group([(1, 2, 3, 0), (0, 3, 2, 1)])
    groups["D5"] = permutation_group([(1, 2, 3, 4, 0), (0, 4, 3, 2, 1)])
    groups["D6"] = permutation_group([(1, 2, 3, 4, 5, 0), (0, 5, 4, 3, 2, 1)])
    groups["A4"] = permutation_group([(1, 2, 0, 3), (1, 0, 3, 2)])
    groups["Q8"] = quaternion_group()
    return groups


def relabel(table, rng):
    """Conjugate a Cayley table by a random relabelling that keeps 0 fixed."""
    n = len(table)
    perm = np.concatenate([[0], 1 + rng.permutation(n - 1)])
    inv = np.argsort(perm)
    return perm[table[inv[:, None], inv[None, :]]]


# -- other associative families ----------------------------------------------


def random_poset(m, rng, density=0.4):
    rel = {(a, a) for a in range(m)}
    for a in range(m):
        for b in range(a + 1, m):
            if rng.random() < density:
                rel.add((a, b))
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return sorted(rel)


def polynomial_quotient(field: FiniteField, f):
    """F_p[x]/(f) for monic f on the basis 1, x, ..., x^(d-1)."""
    if not field.is_prime_field:
        raise InputError("polynomial quotients are built over prime fields only")
    p = field.p
    d = len(f) - 1
    table = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            mono = [0] * (i + j) + [1]
            rem = poly_rem(mono, f, p)
            table[i, j, :len(rem)] = rem
    unit = np.zeros(d, dtype=np.int64)
    unit[0] = 1
    return StructureConstantAlgebra(field, table, unit, f"{field.name}[x]/({_poly_str(f)})")


def _poly_str(f):
    terms = [("" if c == 1 and k else str(c)) + (f"x^{k}" if k > 1 else "x" if k == 1 else "")
             for k, c in reversed(list(enumerate(f))) if c]
    return "+".join(terms)


def direct_sum(A: StructureConstantAlgebra, B: StructureConstantAlgebra):
    if A.field is not B.field:
        raise InputError("direct sum needs a common field")
    n, m = A.n, B.n
    table = np.zeros((n + m, n + m, n + m), dtype=np.int64)
    table[:n, :n, :n] = A.table
    table[n:, n:, n:] = B.table
    unit = np.concatenate([A.unit, B.unit])
    return StructureConstantAlgebra(A.field, table, unit, f"{A.descriptor} + {B.descriptor}")


def change_basis(A: StructureConstantAlgebra, P, descriptor=None):
    """Structure constants on the new basis b'_i = sum_a P[i, a] b_a."""
    F = A.field
    if not F.is_prime_field:
        raise InputError("change of basis implemented over prime fields only")
    p = F.p
    P = np.asarray(P, dtype=np.int64) % p
    Q = inverse(F, P)
    if Q is None:
        raise InputError("change-of-basis matrix is singular")
    table = np.einsum("ia,jb,abl,lk->ijk", P, P, A.table, Q) % p
    unit = (A.unit @ Q) % p
    return StructureConstantAlgebra(F, table, unit, descriptor or f"{A.descriptor}~")


def random_invertible(field, n, rng):
    while True:
        P = rng.integers(0, field.p, size=(n, n))
        if inverse(field, P) is not None:
            return P


# -- the battery --------------------------------------------------------------


def _max_dim(q):
    d = 0
    while q ** (d + 1) <= MAX_SIZE:
        d += 1
    return d


def random_algebra(rng, fields=None):
    """One random validated algebra with at most MAX_SIZE elements."""
    fields = fields or [make_field(2), make_field(3)]
    F = fields[int(rng.integers(len(fields)))]
    top = _max_dim(F.q)
    family = rng.choice(["group", "incidence", "polynomial", "sum"], p=[0.35, 0.35, 0.15, 0.15])
    if family == "group":
        groups = [(name, t) for name, t in small_groups().items() if 2 <= len(t) <= top]
        name, t = groups[int(rng.integers(len(groups)))]
        A = build_group_algebra(F, relabel(t, rng), f"{F.name}[{name}]")
    elif family == "incidence":
        while True:
            rel = random_poset(int(rng.integers(2, 5)), rng, density=float(rng.uniform(0.2, 0.8)))
            if len(rel) <= top:
                break
        A = build_incidence_algebra(F, rel, f"I_{F.name}({len(rel)})")
    elif family == "polynomial":
        d = int(rng.integers(1, min(top, 6) + 1))
        f = list(rng.integers(0, F.p, size=d)) + [1]
        A = polynomial_quotient(F, f)
    else:
        d1 = int(rng.integers(1, top))
        A1 = polynomial_quotient(F, list(rng.integers(0, F.p, size=d1)) + [1])
        rel = random_poset(int(rng.integers(1, 3)), rng)
        if len(rel) <= top - d1:
            A2 = build_incidence_algebra(F, rel, f"I_{F.name}({len(rel)})")
        else:
            d2 = int(rng.integers(1, top - d1 + 1))
            A2 = polynomial_quotient(F, list(rng.integers(0, F.p, size=d2)) + [1])
        A = direct_sum(A1, A2)
    if rng.random() < 0.5:
        A = change_basis(A, random_invertible(F, A.n, rng), f"{A.descriptor}~")
    report = verify_ring_axioms(A)
    if not report.passed:
        raise NotARing(report.summary())
    return A


def random_battery(count=100, seed=20261016):
    rng = np.random.default_rng(seed)
    return [random_algebra(rng) for _ in range(count)]

