"""Inner automorphisms x -> (1+u) x (1-u) induced by square-zero elements u."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import NotEquivalent, NotGraphAutomorphism, NotIdempotent, NotSquareZero, TheoremViolation
from .graph import IdempotentDigraph
from .idempotents import Kind, Provenance, SquareZeroElement, class_of, is_idempotent
from .linalg import rank
from .rings import EXHAUSTIVE_LIMIT, Ring


class Direction(str, enum.Enum):
    FORWARD = "forward"  # x -> (1+u) x (1-u)
    REVERSE = "reverse"  # x -> (1-u) x (1+u)


@dataclass(frozen=True, eq=False)
class InnerAutomorphism:
    ring: Ring
    u: SquareZeroElement
    direction: Direction
    left: int = field(repr=False)  # x -> left * x * right
    right: int = field(repr=False)

    def __call__(self, x):
        R = self.ring
        return R.mul(R.mul(self.left, x), self.right)

    @cached_property
    def mapping(self):
        """Image of every ring index."""
        out = self(self.ring.elements())
        out.setflags(write=False)
        return out

    def signature(self):
        """Data that determines the map: basis images for algebras (the map is
        linear), the full permutation otherwise."""
        if self.ring.is_algebra:
            return tuple(int(x) for x in self(self.ring.basis()))
        return tuple(int(x) for x in self.mapping)

    def same_map(self, other: "InnerAutomorphism") -> bool:
        return self.signature() == other.signature()

    def inverse(self) -> "InnerAutomorphism":
        return from_square_zero(self.ring, self.ring.neg(self.u.value), self.direction)

    def violations(self, exhaustive: bool | None = None):
        """Names of automorphism properties that fail.

        Multiplicativity and additivity are checked on all pairs when
        ``exhaustive`` (the default for non-algebras with |R| <= 4096),
        otherwise on basis pairs, which suffices for a linear map.
        """
        R = self.ring
        bad = []
        if R.mul(self.left, self.right) != R.one or R.mul(self.right, self.left) != R.one:
            bad.append("1+u and 1-u are not mutually inverse")
        if exhaustive is None:
            exhaustive = not R.is_algebra and R.size <= EXHAUSTIVE_LIMIT
        if exhaustive:
            sigma = self.mapping
            if len(np.unique(sigma)) != R.size:
                bad.append("not a bijection")
            M, A = R.mul_table, R.add_table
            if not np.array_equal(sigma[M], M[sigma[:, None], sigma[None, :]]):
                bad.append("not multiplicative")
            if not np.array_equal(sigma[A], A[sigma[:, None], sigma[None, :]]):
                bad.append("not additive")
        else:
            b = R.basis()
            sb = self(b)
            if len(np.unique(sb)) != len(b) or R.field.q ** _rank(R, sb) != R.size:
                bad.append("not a bijection")
            prods = R.mul(b[:, None], b[None, :])
            if not np.array_equal(self(prods), R.mul(sb[:, None], sb[None, :])):
                bad.append("not multiplicative")
            sums = R.add(b[:, None], b[None, :])
            if not np.array_equal(self(sums), R.add(sb[:, None], sb[None, :])):
                bad.append("not additive")
        if self(R.zero) != R.zero or self(R.one) != R.one:
            bad.append("does not fix 0 and 1")
        return bad


def _rank(R, xs):
    return rank(R.field, R.vectors(np.asarray(xs)))


def from_square_zero(R: Ring, u: int, direction=Direction.FORWARD, provenance=Provenance.DIFFERENCE,
                     sources=(), validate: bool = True, exhaustive: bool | None = None) -> InnerAutomorphism:
    if R.mul(u, u) != R.zero:
        raise NotSquareZero(u)
    sz = SquareZeroElement(int(u), Provenance(provenance), tuple(int(s) for s in sources))
    plus, minus = R.add(R.one, u), R.sub(R.one, u)
    direction = Direction(direction)
    if direction is Direction.FORWARD:
        sigma = InnerAutomorphism(R, sz, direction, plus, minus)
    else:
        sigma = InnerAutomorphism(R, sz, direction, minus, plus)
    if validate:
        bad = sigma.violations(exhaustive)
        if bad:
            raise TheoremViolation(f"conjugation by 1+{u} fails: {bad}")
    return sigma


def connect_pair(R: Ring, e1: int, e2: int, kind, exhaustive: bool | None = None) -> InnerAutomorphism:
    """Inner automorphism sending e1 to e2 for e1, e2 in the same out- or in-class.

    Out-classes use x -> (1+u)x(1-u) and in-classes x -> (1-u)x(1+u), with
    u = e2 - e1 in both cases.
    """
    kind = Kind(kind)
    for e in (e1, e2):
        if not is_idempotent(R, e):
            raise NotIdempotent(e)
    m = R.mul
    if kind is Kind.OUT:
        ok = m(e1, e2) == e1 and m(e2, e1) == e2
        reason = f"needs e1*e2 = e1 and e2*e1 = e2, got {m(e1, e2)} and {m(e2, e1)}"
        direction = Direction.FORWARD
    else:
        ok = m(e1, e2) == e2 and m(e2, e1) == e1
        reason = f"needs e1*e2 = e2 and e2*e1 = e1, got {m(e1, e2)} and {m(e2, e1)}"
        direction = Direction.REVERSE
    if not ok:
        raise NotEquivalent(e1, e2, kind.value, reason)
    u = R.sub(e2, e1)
    sigma = from_square_zero(R, u, direction, Provenance.DIFFERENCE, (e2, e1), exhaustive=exhaustive)
    if sigma(e1) != e2:
        raise TheoremViolation(f"conjugation sends {e1} to {sigma(e1)}, expected {e2}")
    return sigma


def stabilizer_family(R: Ring, e: int, kind, exhaustive: bool | None = None):
    """One automorphism e -> e' per member e' of the class of e.

    Each maps the class onto itself; the maps are pairwise distinct.
    """
    cls = class_of(R, e, kind)
    members = np.asarray(cls.members, dtype=np.int64)
    family = [connect_pair(R, e, int(x), kind, exhaustive) for x in members]
    sigs = set()
    for sigma in family:
        if set(int(y) for y in sigma(members)) != set(cls.members):
            raise TheoremViolation(f"automorphism {sigma.u.value} does not preserve the class of {e}")
        sigs.add(sigma.signature())
    if len(sigs) != len(family):
        raise TheoremViolation(f"stabilizer family of {e} has repeated maps")
    return family


def induced_graph_map(sigma: InnerAutomorphism, g: IdempotentDigraph):
    """Vertex permutation induced by sigma; checked to preserve adjacency and centrality."""
    images = np.asarray(sigma(g.vertices), dtype=np.int64)
    perm = np.searchsorted(g.vertices, images)
    perm = np.clip(perm, 0, len(g.vertices) - 1)
    if not np.array_equal(g.vertices[perm], images):
        raise NotGraphAutomorphism("an idempotent is sent to a non-idempotent")
    if len(np.unique(perm)) != len(perm):
        raise NotGraphAutomorphism("map on idempotents is not injective")
    if not np.array_equal(g.adjacency[perm[:, None], perm[None, :]], g.adjacency):
        bad = np.argwhere(g.adjacency[perm[:, None], perm[None, :]] != g.adjacency)[0]
        raise NotGraphAutomorphism(f"edge relation not preserved at vertex pair {tuple(int(i) for i in bad)}")
    if not np.array_equal(g.central[perm], g.central):
        raise NotGraphAutomorphism("centrality flags not preserved")
    return [int(p) for p in perm]
