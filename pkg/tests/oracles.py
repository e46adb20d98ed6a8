"""Independent brute-force oracles.

Plain Python over tuples: nothing here touches the package's numpy paths,
lookup tables or index encoding, except ``to_index`` which is the
documented little-endian coordinate encoding used to compare results.
"""
import itertools


# -- scalar arithmetic ---------------------------------------------------------


class PrimeField:
    def __init__(self, p):
        self.p = p
        self.q = p
        self.elements = list(range(p))

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p


class GF4:
    """F_4 = F_2[x]/(x^2+x+1), element a0 + 2*a1 <-> a0 + a1 x."""

    q = 4
    p = 2
    elements = [0, 1, 2, 3]

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        # carry-less product then reduce x^2 -> x + 1
        r = 0
        for i in range(2):
            if (b >> i) & 1:
                r ^= a << i
        if r & 4:
            r ^= 0b111
        return r

    def neg(self, a):
        return a


class IntMod:
    def __init__(self, n):
        self.p = n
        self.q = n
        self.elements = list(range(n))

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p


# -- matrices as tuples of rows -----------------------------------------------


def all_matrices(F, k, upper=False):
    cells = [(a, b) for a in range(k) for b in range(k) if not upper or a <= b]
    for vals in itertools.product(F.elements, repeat=len(cells)):
        m = [[0] * k for _ in range(k)]
        for (a, b), v in zip(cells, vals):
            m[a][b] = v
        yield tuple(tuple(r) for r in m)


def mat_mul(F, x, y):
    k = len(x)
    out = []
    for i in range(k):
        row = []
        for j in range(k):
            s = 0
            for t in range(k):
                s = F.add(s, F.mul(x[i][t], y[t][j]))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_add(F, x, y):
    return tuple(tuple(F.add(a, b) for a, b in zip(r, s)) for r, s in zip(x, y))


def mat_sub(F, x, y):
    return tuple(tuple(F.add(a, F.neg(b)) for a, b in zip(r, s)) for r, s in zip(x, y))


def identity(k):
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def zero(k):
    return tuple(tuple(0 for _ in range(k)) for _ in range(k))


def unit(k, a, b, c=1):
    m = [[0] * k for _ in range(k)]
    m[a][b] = c
    return tuple(tuple(r) for r in m)


def to_index(x, q, upper=False):
    """Little-endian index of a matrix under row-major (or upper-triangular) cells."""
    k = len(x)
    cells = [(a, b) for a in range(k) for b in range(k) if not upper or a <= b]
    return sum(x[a][b] * q ** i for i, (a, b) in enumerate(cells))


# -- brute-force structure ----------------------------------------------------


def idempotents(elems, mul):
    return [x for x in elems if mul(x, x) == x]


def out_class(elems, mul, e):
    return [x for x in elems if mul(e, x) == e and mul(x, e) == x]


def in_class(elems, mul, e):
    return [x for x in elems if mul(e, x) == x and mul(x, e) == e]


def is_central(elems, mul, x):
    return all(mul(x, y) == mul(y, x) for y in elems)


def neighbour_partition(idem, mul, side):
    """Group idempotents by out- (side='out') or in-neighbour sets in the digraph."""
    zero_of = mul(idem[0], idem[0])  # idem[0] is zero in every test ring listing
    groups = {}
    for e in idem:
        if side == "out":
            key = frozenset(f for f in idem if mul(e, f) == zero_of)
        else:
            key = frozenset(f for f in idem if mul(f, e) == zero_of)
        groups.setdefault(key, []).append(e)
    return sorted(sorted(g) for g in groups.values())


def matrix_ring(F, k, upper=False):
    """(elements, mul, index) for M_k(F) or T_k(F) by brute force."""
    elems = list(all_matrices(F, k, upper))
    return elems, (lambda x, y: mat_mul(F, x, y)), (lambda x: to_index(x, F.q, upper))


def zn_ring(n):
    elems = list(range(n))
    return elems, (lambda x, y: x * y % n), (lambda x: x)
