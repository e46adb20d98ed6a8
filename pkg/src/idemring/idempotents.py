"""Idempotents, centrality, companion idempotents and the classes O_e, I_e."""
from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NotAWitness, NotIdempotent, NotSquareZero, SizeExceeded, TheoremViolation
from .rings import Ring

_SCAN_CHUNK = 1 << 12


class Kind(str, enum.Enum):
    OUT = "out"
    IN = "in"


class Provenance(str, enum.Enum):
    LEFT = "left"  # be - ebe
    RIGHT = "right"  # eb - ebe
    DIFFERENCE = "difference"  # e2 - e1


@dataclass(frozen=True)
class SquareZeroElement:
    value: int
    provenance: Provenance
    sources: tuple

    @classmethod
    def make(cls, R: Ring, value: int, provenance, sources=()):
        if R.mul(value, value) != R.zero:
            raise NotSquareZero(value)
        return cls(int(value), Provenance(provenance), tuple(int(s) for s in sources))


@dataclass(frozen=True)
class IdempotentClass:
    base: int
    kind: Kind
    members: tuple

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return int(x) in self.members


@dataclass(frozen=True)
class CompanionPair:
    """e_l = e + u lies in O_e (e e_l = e, e_l e = e_l); e_r = e + v lies in
    I_e (e e_r = e_r, e_r e = e)."""

    e: int
    e_l: int
    e_r: int
    u: SquareZeroElement
    v: SquareZeroElement
    witness_b: int

    @property
    def left_nontrivial(self) -> bool:
        return self.e_l != self.e

    @property
    def right_nontrivial(self) -> bool:
        return self.e_r != self.e


# ---------------------------------------------------------------------------


def _scan(R: Ring, lo: int, hi: int):
    a = np.arange(lo, hi, dtype=np.int64)
    return a[R.mul(a, a) == a]


def enumerate_idempotents(R: Ring, workers: int = 1, bound: int | None = None):
    """All x with x*x = x, sorted by index.

    The scan is split over index ranges; with workers > 1 ranges run on a
    thread pool and are concatenated in range order, so the result does not
    depend on the degree of parallelism.
    """
    bound = R.bound if bound is None else bound
    if R.size > bound:
        raise SizeExceeded(R.size, bound)
    if workers <= 1:
        return _idempotents_cached(R)
    step = max(_SCAN_CHUNK, -(-R.size // workers))
    ranges = [(lo, min(lo + step, R.size)) for lo in range(0, R.size, step)]
    with ThreadPoolExecutor(workers) as pool:
        parts = list(pool.map(lambda r: _scan(R, *r), ranges))
    return np.concatenate(parts)


@lru_cache(maxsize=64)
def _idempotents_cached(R: Ring):
    out = np.concatenate([_scan(R, lo, min(lo + (1 << 16), R.size)) for lo in range(0, R.size, 1 << 16)])
    out.setflags(write=False)
    return out


def is_idempotent(R: Ring, x) -> bool:
    return R.mul(x, x) == x


def _require_idempotent(R, e):
    if not is_idempotent(R, e):
        raise NotIdempotent(e)


def is_central(R: Ring, x: int, exhaustive: bool = False) -> bool:
    """True iff x commutes with every element.

    Algebras are tested against their basis (bilinearity), other rings
    against every element; ``exhaustive=True`` always scans all of R.
    """
    others = R.elements() if exhaustive else R.central_test_set()
    return bool(np.array_equal(R.mul(x, others), R.mul(others, x)))


def central_flags(R: Ring, xs, exhaustive: bool = False):
    others = R.elements() if exhaustive else R.central_test_set()
    xs = np.asarray(xs, dtype=np.int64)
    left = R.mul(xs[:, None], others[None, :])
    right = R.mul(others[None, :], xs[:, None])
    return np.all(left == right, axis=1)


def commutes_with_all_idempotents(R: Ring, e: int) -> bool:
    _require_idempotent(R, e)
    idem = enumerate_idempotents(R)
    return bool(np.array_equal(R.mul(e, idem), R.mul(idem, e)))


def noncentrality_witness(R: Ring, e: int):
    """Smallest-index b with be - ebe != eb - ebe, or None if e is central.

    be - ebe and eb - ebe differ exactly when be != eb.
    """
    _require_idempotent(R, e)
    for lo in range(0, R.size, _SCAN_CHUNK):
        b = np.arange(lo, min(lo + _SCAN_CHUNK, R.size), dtype=np.int64)
        hit = np.flatnonzero(R.mul(b, e) != R.mul(e, b))
        if len(hit):
            return int(b[hit[0]])
    return None


def companion_idempotents(R: Ring, e: int, b: int) -> CompanionPair:
    """Build u = be - ebe, v = eb - ebe and the companions e_l = e+u, e_r = e+v."""
    _require_idempotent(R, e)
    pair = build_companion_pair(R, e, b)
    problems = companion_violations(R, pair)
    if problems:
        raise TheoremViolation(f"companion relations fail for e={e}, b={b}: {problems}")
    return pair


def build_companion_pair(R: Ring, e: int, b: int) -> CompanionPair:
    """The pair for witness b, without checking any of its relations."""
    ebe = R.mul(R.mul(e, b), e)
    u = R.sub(R.mul(b, e), ebe)
    v = R.sub(R.mul(e, b), ebe)
    if u == v:
        raise NotAWitness(e, b)
    return CompanionPair(int(e), R.add(e, u), R.add(e, v),
                         SquareZeroElement(u, Provenance.LEFT, (int(b), int(e))),
                         SquareZeroElement(v, Provenance.RIGHT, (int(b), int(e))), int(b))


def companion_violations(R: Ring, pair: CompanionPair):
    """Names of the companion-pair relations that do not hold."""
    e, el, er = pair.e, pair.e_l, pair.e_r
    m = R.mul
    checks = {
        "u^2 = 0": m(pair.u.value, pair.u.value) == R.zero,
        "v^2 = 0": m(pair.v.value, pair.v.value) == R.zero,
        "e e_l = e": m(e, el) == e,
        "e_l e = e_l": m(el, e) == el,
        "e e_r = e_r": m(e, er) == er,
        "e_r e = e": m(er, e) == e,
        "e_l idempotent": m(el, el) == el,
        "e_r idempotent": m(er, er) == er,
        "a companion differs from e": el != e or er != e,
    }
    return [name for name, ok in checks.items() if not ok]


def _class(R, e, kind):
    _require_idempotent(R, e)
    idem = enumerate_idempotents(R)
    ex, xe = R.mul(e, idem), R.mul(idem, e)
    if Kind(kind) is Kind.OUT:
        mask = (ex == e) & (xe == idem)
    else:
        mask = (ex == idem) & (xe == e)
    return IdempotentClass(int(e), Kind(kind), tuple(int(x) for x in idem[mask]))


def out_class(R: Ring, e: int) -> IdempotentClass:
    """O_e = {x : ex = e, xe = x}, scanned over the idempotents."""
    return _class(R, e, Kind.OUT)


def in_class(R: Ring, e: int) -> IdempotentClass:
    """I_e = {x : ex = x, xe = e}."""
    return _class(R, e, Kind.IN)


def class_of(R: Ring, e: int, kind) -> IdempotentClass:
    return _class(R, e, kind)


def _partition(R, kind):
    idem = enumerate_idempotents(R)
    seen = set()
    classes = []
    for e in idem:
        e = int(e)
        if e in seen:
            continue
        cls = _class(R, e, kind)
        seen.update(cls.members)
        classes.append(cls)
    return classes


def partition_out(R: Ring):
    return _partition(R, Kind.OUT)


def partition_in(R: Ring):
    return _partition(R, Kind.IN)
