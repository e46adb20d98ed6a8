"""Finite unital rings with every element addressed by a canonical index.

An element's index is the little-endian positional encoding of its
coordinate vector (first coordinate least significant), so index 0 is
always the zero element.  All ring operations accept either Python ints or
integer numpy arrays of indices and broadcast like numpy ufuncs.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .errors import InputError, NotAGroup, NotARing, SizeExceeded
from .field import FiniteField

DEFAULT_BOUND = 2 ** 20
# full operation tables, exhaustive pair checks
EXHAUSTIVE_LIMIT = 4096
# exhaustive triple checks (|R|^3 lookups)
TRIPLE_LIMIT = 256
_SAMPLED_TRIPLES = 1 << 18
_CHUNK = 1 << 21


def _check_size(size, bound):
    bound = DEFAULT_BOUND if bound is None else bound
    if size > bound:
        raise SizeExceeded(size, bound)


def _scalar_or_array(fn):
    def wrapper(self, *args):
        arrs = [np.asarray(a, dtype=np.int64) for a in args]
        scalar = all(a.ndim == 0 for a in arrs)
        arrs = np.broadcast_arrays(*arrs)
        shape = arrs[0].shape
        out = fn(self, *(a.reshape(-1) for a in arrs)).reshape(shape)
        return int(out) if scalar else out

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


class Ring(ABC):
    """Abstract finite ring with identity on the index set range(size)."""

    descriptor: str
    size: int
    one: int
    zero = 0
    bound = DEFAULT_BOUND
    #: base field when the ring is an F_q-algebra with index = base-q vector
    field: FiniteField | None = None

    # -- subclasses implement these on flat int64 arrays --------------------
    @abstractmethod
    def _add(self, x, y): ...

    @abstractmethod
    def _neg(self, x): ...

    @abstractmethod
    def _mul(self, x, y): ...

    @abstractmethod
    def coords(self, i: int) -> tuple: ...

    @abstractmethod
    def index(self, coords) -> int: ...

    # -- public vectorised surface -----------------------------------------
    @_scalar_or_array
    def add(self, x, y):
        return self._add(x, y)

    @_scalar_or_array
    def neg(self, x):
        return self._neg(x)

    @_scalar_or_array
    def sub(self, x, y):
        return self._add(x, self._neg(y))

    @_scalar_or_array
    def mul(self, x, y):
        return self._mul(x, y)

    def elements(self):
        return np.arange(self.size, dtype=np.int64)

    def __repr__(self):
        return f"<{type(self).__name__} {self.descriptor} |R|={self.size}>"

    # -- algebra structure ------------------------------------------------
    @property
    def is_algebra(self) -> bool:
        return self.field is not None

    @property
    def dim(self) -> int:
        """Dimension over the base field (algebras only)."""
        q = self.field.q
        d, s = 0, 1
        while s < self.size:
            s *= q
            d += 1
        return d

    def basis(self):
        """Indices of the standard basis vectors (algebras only)."""
        q = self.field.q
        return q ** np.arange(self.dim, dtype=np.int64)

    def vectors(self, idx):
        """Coordinate vectors over the base field, shape (..., dim)."""
        q = self.field.q
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[..., None] // q ** np.arange(self.dim, dtype=np.int64)) % q

    def from_vectors(self, vecs):
        q = self.field.q
        vecs = np.asarray(vecs, dtype=np.int64)
        out = vecs @ (q ** np.arange(vecs.shape[-1], dtype=np.int64))
        return int(out) if out.ndim == 0 else out

    def scale(self, c, x):
        """Scalar multiple c*x for a field element c (algebras only)."""
        c = np.asarray(c, dtype=np.int64)
        return self.from_vectors(self.field.mul_table[c[..., None], self.vectors(x)])

    def central_test_set(self):
        """Elements it suffices to commute with to be central."""
        return self.basis() if self.is_algebra else self.elements()

    # -- cached full tables -------------------------------------------------
    def _full_table(self, op):
        if self.size > EXHAUSTIVE_LIMIT:
            raise SizeExceeded(self.size, EXHAUSTIVE_LIMIT)
        a = self.elements()
        out = np.empty((self.size, self.size), dtype=np.int64)
        rows = max(1, _CHUNK // max(self.size, 1) // 8)
        for start in range(0, self.size, rows):
            block = a[start:start + rows]
            out[start:start + rows] = op(np.repeat(block, self.size), np.tile(a, len(block))).reshape(len(block), self.size)
        out.setflags(write=False)
        return out

    @cached_property
    def mul_table(self):
        return self._full_table(self._mul_reference)

    @cached_property
    def add_table(self):
        return self._full_table(self._add)

    def _mul_reference(self, x, y):
        # route used to build mul_table; subclasses may supply an independent one
        return self._mul(x, y)

    def is_commutative(self) -> bool:
        g = self.central_test_set()
        x, y = np.meshgrid(g, g, indexing="ij")
        return bool(np.array_equal(self.mul(x, y), self.mul(y, x)))

    # -- display ----------------------------------------------------------
    def format(self, i: int) -> str:
        return "(" + ",".join(str(c) for c in self.coords(i)) + ")"


# ---------------------------------------------------------------------------
# structure-constant algebras
# ---------------------------------------------------------------------------


class StructureConstantAlgebra(Ring):
    """Associative unital algebra over F_q given by b_i b_j = sum_k c_ijk b_k."""

    def __init__(self, field: FiniteField, table, unit, descriptor=None, *,
                 labels=None, matrix_layout=None, bound=None, check=True):
        table = np.asarray(table, dtype=np.int64)
        unit = np.asarray(unit, dtype=np.int64)
        n = table.shape[0]
        if n < 1 or table.shape != (n, n, n) or unit.shape != (n,):
            raise InputError(f"structure constants must be n x n x n with a length-n unit, got {table.shape}, {unit.shape}")
        if np.any((table < 0) | (table >= field.q)) or np.any((unit < 0) | (unit >= field.q)):
            raise InputError(f"structure constants must be field elements in [0, {field.q})")
        _check_size(field.q ** n, bound)
        self.bound = DEFAULT_BOUND if bound is None else bound
        self.field = field
        self.n = n
        self.table = table
        self.table.setflags(write=False)
        self.unit = unit
        self.size = field.q ** n
        self.one = int(unit @ (field.q ** np.arange(n)))
        self.descriptor = descriptor or f"A({field.name}, dim {n})"
        self.labels = labels or [f"b{i}" for i in range(n)]
        # matrix_layout: (k, [(row, col) for each basis element]) for display
        self.matrix_layout = matrix_layout
        self._flat = table.reshape(n * n, n)
        self._flat_f = self._flat.astype(np.float64)
        if check:
            report = verify_ring_axioms(self)
            if not report.passed:
                raise NotARing(report.summary())

    @property
    def dim(self) -> int:
        return self.n

    def coords(self, i):
        return tuple(int(c) for c in self.vectors(i))

    def index(self, coords):
        coords = list(coords)
        if len(coords) != self.n or any(not 0 <= int(c) < self.field.q for c in coords):
            raise InputError(f"bad coordinates {coords} for {self.descriptor}")
        return self.from_vectors(coords)

    def _add(self, x, y):
        return self.from_vectors(self.field.add_table[self.vectors(x), self.vectors(y)])

    def _neg(self, x):
        return self.from_vectors(self.field.neg_table[self.vectors(x)])

    def _chunks(self, x, y):
        step = max(1, _CHUNK // (self.n * self.n))
        for s in range(0, len(x), step):
            yield s, x[s:s + step], y[s:s + step]

    def _mul(self, x, y):
        if self.field.is_prime_field:
            return self._mul_blas(x, y)
        return self._mul_lut(x, y)

    def _mul_blas(self, x, y):
        p = self.field.p
        out = np.empty(len(x), dtype=np.int64)
        for s, xs, ys in self._chunks(x, y):
            vx, vy = self.vectors(xs), self.vectors(ys)
            outer = (vx[:, :, None] * vy[:, None, :]).reshape(len(xs), -1)
            prod = np.rint(outer.astype(np.float64) @ self._flat_f).astype(np.int64) % p
            out[s:s + len(xs)] = self.from_vectors(prod)
        return out

    def _mul_lut(self, x, y):
        F = self.field
        out = np.empty(len(x), dtype=np.int64)
        step = max(1, _CHUNK // (self.n ** 3))
        for s in range(0, len(x), step):
            xs, ys = x[s:s + step], y[s:s + step]
            vx, vy = self.vectors(xs), self.vectors(ys)
            outer = F.mul_table[vx[:, :, None], vy[:, None, :]].reshape(len(xs), -1)
            terms = F.mul_table[outer[:, :, None], self._flat[None, :, :]]
            out[s:s + len(xs)] = self.from_vectors(F.sum(terms, axis=1))
        return out

    def _mul_reference(self, x, y):
        return self._mul_lut(x, y)

    def format(self, i):
        if self.matrix_layout is None:
            return super().format(i)
        k, cells = self.matrix_layout
        mat = [[0] * k for _ in range(k)]
        for c, (r, col) in zip(self.coords(i), cells):
            mat[r][col] = c
        return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in mat) + "]"


def _matrix_unit_algebra(field, k, cells, descriptor, bound):
    """Span of the given matrix units E_ab (must be closed under products)."""
    pos = {cell: i for i, cell in enumerate(cells)}
    n = len(cells)
    table = np.zeros((n, n, n), dtype=np.int64)
    for i, (a, b) in enumerate(cells):
        for j, (c, d) in enumerate(cells):
            if b == c:
                table[i, j, pos[(a, d)]] = 1
    unit = np.array([1 if a == b else 0 for a, b in cells], dtype=np.int64)
    labels = [f"E{a + 1}{b + 1}" for a, b in cells]
    return StructureConstantAlgebra(field, table, unit, descriptor, labels=labels,
                                    matrix_layout=(k, list(cells)), bound=bound)


def build_matrix_algebra(field: FiniteField, k: int, bound=None) -> StructureConstantAlgebra:
    """M_k(F_q) on the matrix units E_ab, ordered row-major."""
    if k < 1:
        raise InputError(f"matrix size must be >= 1, got {k}")
    _check_size(field.q ** (k * k), bound)
    cells = [(a, b) for a in range(k) for b in range(k)]
    return _matrix_unit_algebra(field, k, cells, f"M_{k}({field.name})", bound)


def build_upper_triangular(field: FiniteField, k: int, bound=None) -> StructureConstantAlgebra:
    """Upper triangular k x k matrices, basis E_ab (a <= b) row-major."""
    if k < 1:
        raise InputError(f"matrix size must be >= 1, got {k}")
    _check_size(field.q ** (k * (k + 1) // 2), bound)
    cells = [(a, b) for a in range(k) for b in range(a, k)]
    return _matrix_unit_algebra(field, k, cells, f"T_{k}({field.name})", bound)


def build_incidence_algebra(field: FiniteField, relation, descriptor=None, bound=None):
    """Incidence algebra of a finite poset given as a set of pairs (a, b), a <= b."""
    cells = sorted(set(tuple(map(int, c)) for c in relation))
    points = sorted({a for a, _ in cells} | {b for _, b in cells})
    k = max(points) + 1 if points else 0
    if any((a, a) not in cells for a in range(k)):
        raise InputError("incidence relation must be reflexive")
    return _matrix_unit_algebra(field, k, cells, descriptor or f"I({field.name}, {len(cells)})", bound)


def build_field_algebra(field: FiniteField) -> StructureConstantAlgebra:
    """F_q as a one-dimensional algebra over itself."""
    return StructureConstantAlgebra(field, [[[1]]], [1], field.name)


def check_group_table(cayley):
    """Raise NotAGroup unless cayley is a group table with identity at 0."""
    t = np.asarray(cayley, dtype=np.int64)
    g = t.shape[0] if t.ndim == 2 else 0
    if g < 1 or t.shape != (g, g):
        raise NotAGroup(f"cayley table must be square, got shape {t.shape}")
    if np.any((t < 0) | (t >= g)):
        raise NotAGroup("cayley entries out of range")
    for i in range(g):
        if sorted(t[i]) != list(range(g)):
            raise NotAGroup(f"row {i} is not a permutation")
        if sorted(t[:, i]) != list(range(g)):
            raise NotAGroup(f"column {i} is not a permutation")
    if not (np.array_equal(t[0], np.arange(g)) and np.array_equal(t[:, 0], np.arange(g))):
        raise NotAGroup("index 0 is not the identity")
    lhs = t[t[:, :, None], np.arange(g)[None, None, :]]
    rhs = t[np.arange(g)[:, None, None], t[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        i, j, k = map(int, bad[0])
        raise NotAGroup(f"not associative at ({i}, {j}, {k})")
    return t


def build_group_algebra(field: FiniteField, cayley, descriptor=None, bound=None):
    t = check_group_table(cayley)
    g = t.shape[0]
    _check_size(field.q ** g, bound)
    table = np.zeros((g, g, g), dtype=np.int64)
    i, j = np.meshgrid(np.arange(g), np.arange(g), indexing="ij")
    table[i, j, t] = 1
    unit = np.zeros(g, dtype=np.int64)
    unit[0] = 1
    return StructureConstantAlgebra(field, table, unit, descriptor or f"{field.name}[G_{g}]",
                                    labels=[f"g{i}" for i in range(g)], bound=bound)


def build_structure_constants(field: FiniteField, table, unit, descriptor=None, bound=None, check=True):
    return StructureConstantAlgebra(field, table, unit, descriptor, bound=bound, check=check)


# ---------------------------------------------------------------------------
# Z/n, matrices over Z/n, products
# ---------------------------------------------------------------------------


def _prime_field_or_none(n):
    from .field import is_prime, make_field

    return make_field(n) if is_prime(n) else None


class ZnRing(Ring):
    def __init__(self, n: int, bound=None):
        if n < 2:
            raise InputError(f"Z/n needs n >= 2, got {n}")
        _check_size(n, bound)
        self.bound = DEFAULT_BOUND if bound is None else bound
        self.n = n
        self.size = n
        self.one = 1
        self.descriptor = f"Z/{n}"
        self.field = _prime_field_or_none(n)

    def coords(self, i):
        return (int(i),)

    def index(self, coords):
        (c,) = coords
        if not 0 <= int(c) < self.n:
            raise InputError(f"residue {c} out of range for Z/{self.n}")
        return int(c)

    def _add(self, x, y):
        return (x + y) % self.n

    def _neg(self, x):
        return (-x) % self.n

    def _mul(self, x, y):
        return (x * y) % self.n

    def format(self, i):
        return str(int(i))


class ZnMatrixRing(Ring):
    """k x k matrices over Z/n; entry (a, b) is coordinate a*k + b."""

    def __init__(self, n: int, k: int, bound=None):
        if n < 2 or k < 1:
            raise InputError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
        _check_size(n ** (k * k), bound)
        self.bound = DEFAULT_BOUND if bound is None else bound
        self.n, self.k = n, k
        self.size = n ** (k * k)
        self._powers = n ** np.arange(k * k, dtype=np.int64)
        self.one = int(sum(self._powers[a * k + a] for a in range(k)))
        self.descriptor = f"M_{k}(Z/{n})"
        self.field = _prime_field_or_none(n)

    def _digits(self, x):
        return (x[..., None] // self._powers) % self.n

    def coords(self, i):
        return tuple(int(c) for c in self._digits(np.asarray(i)))

    def index(self, coords):
        coords = list(coords)
        if len(coords) != self.k ** 2 or any(not 0 <= int(c) < self.n for c in coords):
            raise InputError(f"bad coordinates {coords} for {self.descriptor}")
        return int(np.asarray(coords, dtype=np.int64) @ self._powers)

    def _add(self, x, y):
        return ((self._digits(x) + self._digits(y)) % self.n) @ self._powers

    def _neg(self, x):
        return ((-self._digits(x)) % self.n) @ self._powers

    def _mul(self, x, y):
        k = self.k
        a = self._digits(x).reshape(-1, k, k)
        b = self._digits(y).reshape(-1, k, k)
        return (np.einsum("nab,nbc->nac", a, b) % self.n).reshape(-1, k * k) @ self._powers

    def format(self, i):
        c = self.coords(i)
        k = self.k
        return "[" + ",".join("[" + ",".join(str(v) for v in c[r * k:(r + 1) * k]) + "]" for r in range(k)) + "]"


class ProductRing(Ring):
    """Direct product; coordinates are factor indices, first factor least significant."""

    def __init__(self, factors, bound=None):
        factors = list(factors)
        if not factors:
            raise InputError("product needs at least one factor")
        size = 1
        for f in factors:
            size *= f.size
        _check_size(size, bound)
        self.bound = DEFAULT_BOUND if bound is None else bound
        self.factors = factors
        self.size = size
        self._radix = np.cumprod([1] + [f.size for f in factors[:-1]]).astype(np.int64)
        self.one = int(sum(int(f.one) * int(r) for f, r in zip(factors, self._radix)))
        self.descriptor = " x ".join(f.descriptor for f in factors)
        fields = [f.field for f in factors]
        if all(fl is not None for fl in fields) and all(fl is fields[0] for fl in fields):
            self.field = fields[0]

    def _split(self, x):
        return [(x // r) % f.size for f, r in zip(self.factors, self._radix)]

    def _join(self, parts):
        return sum(p * r for p, r in zip(parts, self._radix))

    def coords(self, i):
        return tuple(int(c) for c in self._split(np.asarray(i, dtype=np.int64)))

    def index(self, coords):
        coords = list(coords)
        if len(coords) != len(self.factors) or any(not 0 <= int(c) < f.size for c, f in zip(coords, self.factors)):
            raise InputError(f"bad coordinates {coords} for {self.descriptor}")
        return int(self._join([np.int64(c) for c in coords]))

    def _add(self, x, y):
        return self._join([f._add(a, b) for f, a, b in zip(self.factors, self._split(x), self._split(y))])

    def _neg(self, x):
        return self._join([f._neg(a) for f, a in zip(self.factors, self._split(x))])

    def _mul(self, x, y):
        return self._join([f._mul(a, b) for f, a, b in zip(self.factors, self._split(x), self._split(y))])

    def central_test_set(self):
        if self.is_algebra:
            return self.basis()
        return self.elements()

    def format(self, i):
        return "(" + ", ".join(f.format(c) for f, c in zip(self.factors, self.coords(i))) + ")"


def build_zn(n: int, bound=None) -> ZnRing:
    return ZnRing(n, bound)


def build_zn_matrix(n: int, k: int, bound=None) -> ZnMatrixRing:
    return ZnMatrixRing(n, k, bound)


def build_product(factors, bound=None) -> ProductRing:
    return ProductRing(factors, bound)


# ---------------------------------------------------------------------------
# axiom verification
# ---------------------------------------------------------------------------


@dataclass
class AxiomResult:
    name: str
    passed: bool
    scope: str
    counterexample: tuple | None = None


@dataclass
class AxiomReport:
    descriptor: str
    results: list = dc_field(default_factory=list)
    commutative: bool = False

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def summary(self) -> str:
        bad = self.failures()
        if not bad:
            return f"{self.descriptor}: all ring axioms hold"
        return f"{self.descriptor}: " + "; ".join(f"{r.name} fails at {r.counterexample}" for r in bad)

    def format(self) -> str:
        lines = [f"ring: {self.descriptor}"]
        for r in self.results:
            status = "pass" if r.passed else "FAIL"
            line = f"  {status:4}  {r.name:28} [{r.scope}]"
            if r.counterexample is not None:
                line += f"  counterexample {r.counterexample}"
            lines.append(line)
        lines.append(f"  commutative: {str(self.commutative).lower()}")
        return "\n".join(lines)


def _first_mismatch(lhs, rhs, *grids):
    bad = np.flatnonzero(np.asarray(lhs != rhs).reshape(-1))
    if not len(bad):
        return None
    pos = bad[0]
    return tuple(int(np.broadcast_to(g, np.shape(lhs)).reshape(-1)[pos]) for g in grids)


def _check_triples(R, x, y, z, results, scope, mul, add):
    xy = mul(x, y)
    results.append(AxiomResult("multiplicative associativity", None, scope,
                               _first_mismatch(mul(xy, z), mul(x, mul(y, z)), x, y, z)))
    results.append(AxiomResult("left distributivity", None, scope,
                               _first_mismatch(mul(x, add(y, z)), add(xy, mul(x, z)), x, y, z)))
    results.append(AxiomResult("right distributivity", None, scope,
                               _first_mismatch(mul(add(x, y), z), add(mul(x, z), mul(y, z)), x, y, z)))
    results.append(AxiomResult("additive associativity", None, scope,
                               _first_mismatch(add(add(x, y), z), add(x, add(y, z)), x, y, z)))


def verify_ring_axioms(R: Ring, exhaustive: bool | None = None) -> AxiomReport:
    """Check the unital-ring axioms, recording a counterexample for each failure.

    Structure-constant algebras are checked on basis triples by default
    (enough by bilinearity); ``exhaustive=True`` forces the element-level
    check, which is the oracle for that shortcut.  Other rings are checked
    on all pairs when |R| <= 4096 and on all triples when |R| <= 256;
    larger triple checks fall back to a fixed-seed sample.
    """
    report = AxiomReport(R.descriptor)
    res = report.results
    if exhaustive is None:
        exhaustive = not isinstance(R, StructureConstantAlgebra)

    if not exhaustive:
        b = R.basis()
        i, j, k = np.meshgrid(b, b, b, indexing="ij")
        ij = R.mul(i, j)
        res.append(AxiomResult("multiplicative associativity", None, "basis triples",
                               _first_mismatch(R.mul(ij, k), R.mul(i, R.mul(j, k)), i, j, k)))
        res.append(AxiomResult("distributivity", True, "bilinear by construction"))
        res.append(AxiomResult("additive group", True, "vector space over verified field"))
        res.append(AxiomResult("left identity", None, "basis",
                               _first_mismatch(R.mul(R.one, b), b, b)))
        res.append(AxiomResult("right identity", None, "basis",
                               _first_mismatch(R.mul(b, R.one), b, b)))
    else:
        use_tables = R.size <= EXHAUSTIVE_LIMIT
        if use_tables:
            M, A = R.mul_table, R.add_table
            mul = lambda x, y: M[x, y]  # noqa: E731
            add = lambda x, y: A[x, y]  # noqa: E731
        else:
            mul, add = R.mul, R.add
        if R.size <= TRIPLE_LIMIT:
            a = R.elements()
            x, y, z = a[:, None, None], a[None, :, None], a[None, None, :]
            scope = "all triples"
        else:
            rng = np.random.default_rng(0)
            x, y, z = rng.integers(0, R.size, size=(3, _SAMPLED_TRIPLES))
            scope = f"{_SAMPLED_TRIPLES} sampled triples"
        _check_triples(R, x, y, z, res, scope, mul, add)
        if R.size <= EXHAUSTIVE_LIMIT:
            a = R.elements()
            x, y = a[:, None], a[None, :]
            pscope = "all pairs"
        else:
            rng = np.random.default_rng(1)
            x, y = rng.integers(0, R.size, size=(2, _SAMPLED_TRIPLES))
            pscope = f"{_SAMPLED_TRIPLES} sampled pairs"
        res.append(AxiomResult("additive commutativity", None, pscope,
                               _first_mismatch(add(x, y), add(y, x), x, y)))
        a = R.elements()
        res.append(AxiomResult("additive identity", None, "all elements",
                               _first_mismatch(R.add(a, R.zero), a, a)))
        res.append(AxiomResult("additive inverse", None, "all elements",
                               _first_mismatch(R.add(a, R.neg(a)), np.zeros_like(a), a)))
        res.append(AxiomResult("left identity", None, "all elements",
                               _first_mismatch(R.mul(R.one, a), a, a)))
        res.append(AxiomResult("right identity", None, "all elements",
                               _first_mismatch(R.mul(a, R.one), a, a)))
    for r in res:
        if r.passed is None:
            r.passed = r.counterexample is None
    if R.one == R.zero:
        res.append(AxiomResult("nonzero identity", False, "construction", (R.one,)))
    report.commutative = R.is_commutative()
    return report
