"""Executable checks of the centrality, class and automorphism statements.

Every check returns a ``CheckResult``.  A failure carries a counterexample
given by element coordinates, and ``reproduce`` re-evaluates it through the
ring operations alone.  Since each check is a proved statement, a failure
on a genuine ring means a bug in this package.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import NotAlgebra, RingError
from .graph import IdempotentDigraph, build_graph, check_class_equivalence
from .idempotents import (
    IdempotentClass,
    Kind,
    build_companion_pair,
    central_flags,
    companion_violations,
    enumerate_idempotents,
    in_class,
    noncentrality_witness,
    out_class,
    partition_in,
    partition_out,
)
from .inner import Direction, connect_pair, from_square_zero, induced_graph_map, stabilizer_family
from .linalg import EchelonBasis
from .rings import EXHAUSTIVE_LIMIT, Ring

CHECK_NAMES = ("automorphism", "centrality", "classes", "companions", "counting")
_SPAN_ENUM_LIMIT = 4096


# ---------------------------------------------------------------------------
# span of a class
# ---------------------------------------------------------------------------


@dataclass
class SpanReport:
    cls: IdempotentClass
    basis: tuple
    n: int
    predicted_size: int
    actual_size: int
    coefficients: dict = field(repr=False, default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def is_power_of(n: int, q: int) -> bool:
    while n > 1 and n % q == 0:
        n //= q
    return n == 1


def span_basis(R: Ring, cls: IdempotentClass) -> SpanReport:
    """Greedy idempotent basis of the F_q-span of a class, with the counting checks.

    Verifies that every member is an affine combination (coefficients sum
    to 1) of the basis, that v*v = (sum of coefficients)*v on the span, and
    that the class has exactly q^(n-1) members.  The zero class {0} spans
    the zero space; it is reported with n = 0 and predicted size 1.
    """
    if not R.is_algebra:
        raise NotAlgebra(f"{R.descriptor} is not an algebra over a finite field")
    F = R.field
    q = F.q
    members = np.asarray(cls.members, dtype=np.int64)
    if len(members) == 0:
        raise ValueError("empty class")
    vecs = R.vectors(members)
    eb = EchelonBasis(F, R.dim)
    basis = [int(x) for x, v in zip(members, vecs) if eb.add(v)]
    n = len(basis)
    failures = []
    coefficients = {}
    if n == 0:
        return SpanReport(cls, (), 0, 1, len(members), {}, [] if len(members) == 1 else ["zero class has extra members"])

    for x, v in zip(members, vecs):
        c = eb.coefficients(v)
        coefficients[int(x)] = tuple(int(a) for a in c)
        if int(F.sum(c, axis=0)) != 1:
            failures.append(f"member {int(x)} has coefficient sum {int(F.sum(c, axis=0))}")

    # v*v = (sum c_i) v over the span: all of it when small, else a fixed sample
    basis_arr = np.asarray(basis, dtype=np.int64)
    if q ** n <= _SPAN_ENUM_LIMIT:
        idx = np.arange(q ** n, dtype=np.int64)
        coeffs = (idx[:, None] // q ** np.arange(n, dtype=np.int64)) % q
    else:
        rng = np.random.default_rng(0)
        coeffs = rng.integers(0, q, size=(_SPAN_ENUM_LIMIT, n))
    span_vecs = F.sum(F.mul_table[coeffs[:, :, None], R.vectors(basis_arr)[None, :, :]], axis=1)
    span = R.from_vectors(span_vecs)
    csum = F.sum(coeffs, axis=1)
    lhs = R.mul(span, span)
    rhs = R.scale(csum, span)
    bad = np.flatnonzero(lhs != rhs)
    if len(bad):
        failures.append(f"v*v != (sum c)v at coefficients {coeffs[bad[0]].tolist()}")

    predicted = q ** (n - 1)
    if predicted != len(members):
        failures.append(f"class size {len(members)} != q^(n-1) = {predicted}")
    return SpanReport(cls, tuple(basis), n, predicted, len(members), coefficients, failures)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    status: str  # pass | fail | skipped
    counterexample: dict | None = None
    ms: float = 0.0
    detail: str = ""

    def to_dict(self, timing: bool = False):
        return {
            "name": self.name,
            "status": self.status,
            "counterexample": self.counterexample,
            "ms": round(self.ms, 3) if timing else None,
            "detail": self.detail,
        }


@dataclass
class TheoremReport:
    ring: str
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_json(self, timing: bool = False) -> str:
        doc = {"ring": self.ring, "checks": [c.to_dict(timing) for c in self.checks]}
        return json.dumps(doc, indent=2) + "\n"

    def format(self, timing: bool = False) -> str:
        lines = [f"ring: {self.ring}"]
        for c in self.checks:
            line = f"  {c.status:7}  {c.name:13} {c.detail}"
            if timing:
                line += f"  ({c.ms:.1f} ms)"
            lines.append(line.rstrip())
            if c.counterexample is not None:
                lines.append(f"           counterexample: {json.dumps(c.counterexample, sort_keys=True)}")
        if not self.passed:
            lines.append("A proved statement failed on this ring: this indicates an implementation bug.")
        return "\n".join(lines) + "\n"


def _co(R, x):
    return list(R.coords(int(x)))


def _pass(name, detail=""):
    return CheckResult(name, "pass", detail=detail)


def _fail(name, counterexample, detail=""):
    return CheckResult(name, "fail", counterexample, detail=detail)


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------


def check_centrality_theorem(R: Ring, exhaustive: bool = False) -> CheckResult:
    """e commutes with all idempotents  <=>  e is central, for every idempotent e."""
    idem = np.asarray(enumerate_idempotents(R))
    central = central_flags(R, idem, exhaustive=exhaustive)
    prods = R.mul(idem[:, None], idem[None, :])
    commutes = np.all(prods == prods.T, axis=1)
    bad = np.flatnonzero(central != commutes)
    if len(bad):
        e = idem[bad[0]]
        return _fail("centrality", {"e": _co(R, e), "central": bool(central[bad[0]]),
                                    "commutes_with_idempotents": bool(commutes[bad[0]])})
    nc = int(central.sum())
    return _pass("centrality", f"{nc} central, {len(idem) - nc} non-central idempotents")


def check_companions(R: Ring) -> CheckResult:
    """Every non-central idempotent has a witness b and a valid companion pair."""
    idem = np.asarray(enumerate_idempotents(R))
    central = central_flags(R, idem)
    count = 0
    for e in idem[~central]:
        e = int(e)
        b = noncentrality_witness(R, e)
        if b is None:
            return _fail("companions", {"e": _co(R, e), "b": None, "reason": "no witness for a non-central idempotent"})
        pair = build_companion_pair(R, e, b)
        bad = companion_violations(R, pair)
        if bad:
            return _fail("companions", {"e": _co(R, e), "b": _co(R, b), "violated": bad})
        count += 1
    return _pass("companions", f"{count} non-central idempotents")


def _all_element_class(R, e, kind):
    a = R.elements()
    ex, xe = R.mul(e, a), R.mul(a, e)
    if kind is Kind.OUT:
        return tuple(int(x) for x in a[(ex == e) & (xe == a)])
    return tuple(int(x) for x in a[(ex == a) & (xe == e)])


def _first_class_mismatch(R, g):
    """First (e, x) whose graph-side and relation-side class membership differ."""
    v = g.vertices
    ex = R.mul(v[:, None], v[None, :])  # ex[i, j] = v_i v_j
    for kind, rows in ((Kind.OUT, g.adjacency), (Kind.IN, g.adjacency.T)):
        same = np.all(rows[:, None, :] == rows[None, :, :], axis=2)
        if kind is Kind.OUT:
            rel = (ex == v[:, None]) & (ex.T == v[None, :])
        else:
            rel = (ex == v[None, :]) & (ex.T == v[:, None])
        bad = np.argwhere(same != rel)
        if len(bad):
            i, j = bad[0]
            return {"e": _co(R, v[i]), "x": _co(R, v[j]), "kind": kind.value,
                    "reason": "graph and relation classes differ"}
    return {"e": None, "x": None, "kind": "unknown", "reason": "partitions differ"}


def check_class_theorems(R: Ring, g: IdempotentDigraph | None = None) -> CheckResult:
    """Graph-side classes equal relation-side classes; I_e and O_e meet only in e."""
    g = g if g is not None else build_graph(R)
    rep = check_class_equivalence(R, g)
    if not rep.passed:
        return _fail("classes", _first_class_mismatch(R, g))
    scan_all = R.size <= EXHAUSTIVE_LIMIT
    for e in g.vertices:
        e = int(e)
        o, i = out_class(R, e), in_class(R, e)
        both = set(o.members) & set(i.members)
        if both != {e}:
            x = min(both - {e}) if both - {e} else e
            return _fail("classes", {"e": _co(R, e), "x": _co(R, x), "kind": "intersection",
                                     "reason": "I_e and O_e must meet exactly in e"})
        if scan_all:
            for cls in (o, i):
                full = _all_element_class(R, e, cls.kind)
                if full != cls.members:
                    x = min(set(full) ^ set(cls.members))
                    return _fail("classes", {"e": _co(R, e), "x": _co(R, x), "kind": f"{cls.kind.value}-idempotence",
                                             "reason": "class member that is not idempotent"})
    return _pass("classes", f"{len(partition_out(R))} out-classes, {len(partition_in(R))} in-classes")


def check_automorphism_theorem(R: Ring, g: IdempotentDigraph | None = None,
                               exhaustive: bool | None = None) -> CheckResult:
    """Every ordered pair in a class is joined by a verified inner automorphism."""
    g = g if g is not None else build_graph(R)
    pairs = 0
    for kind, classes in ((Kind.OUT, partition_out(R)), (Kind.IN, partition_in(R))):
        for cls in classes:
            for e1 in cls.members:
                for e2 in cls.members:
                    try:
                        sigma = connect_pair(R, e1, e2, kind, exhaustive)
                        induced_graph_map(sigma, g)
                    except RingError as exc:
                        return _fail("automorphism", {"e1": _co(R, e1), "e2": _co(R, e2), "kind": kind.value,
                                                      "reason": str(exc)})
                    pairs += 1
            try:
                family = stabilizer_family(R, cls.base, kind, exhaustive)
            except RingError as exc:
                return _fail("automorphism", {"e1": _co(R, cls.base), "e2": _co(R, cls.base), "kind": kind.value,
                                              "reason": f"stabilizer family: {exc}"})
            if len(family) != len(cls):
                return _fail("automorphism", {"e1": _co(R, cls.base), "e2": _co(R, cls.base), "kind": kind.value,
                                              "reason": "stabilizer family size differs from class size"})
    return _pass("automorphism", f"{pairs} ordered pairs")


def check_counting(R: Ring) -> CheckResult:
    """Every out- and in-class has q^(n-1) members, n the dimension of its span."""
    if not R.is_algebra:
        return CheckResult("counting", "skipped", None,
                           detail=f"NotAlgebra: {R.descriptor} is not an algebra over a finite field")
    q = R.field.q
    sizes = []
    for classes in (partition_out(R), partition_in(R)):
        for cls in classes:
            rep = span_basis(R, cls)
            sizes.append(len(cls))
            if not is_power_of(len(cls), q) or not rep.ok:
                return _fail("counting", {"e": _co(R, cls.base), "kind": cls.kind.value, "size": len(cls),
                                          "q": q, "n": rep.n, "reason": "; ".join(rep.failures) or "not a power of q"})
    return _pass("counting", f"class sizes {sorted(set(sizes))}, q = {q}")


# ---------------------------------------------------------------------------


def run_all(R: Ring, theorems=None, workers: int = 1, exhaustive: bool | None = None) -> TheoremReport:
    """Run the selected checks (default all), ordered by name in the report."""
    names = sorted(set(theorems or CHECK_NAMES))
    unknown = set(names) - set(CHECK_NAMES)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    g = build_graph(R, workers=workers)
    jobs = {
        "automorphism": lambda: check_automorphism_theorem(R, g, exhaustive),
        "centrality": lambda: check_centrality_theorem(R, bool(exhaustive)),
        "classes": lambda: check_class_theorems(R, g),
        "companions": lambda: check_companions(R),
        "counting": lambda: check_counting(R),
    }

    def timed(name):
        t0 = time.perf_counter()
        res = jobs[name]()
        res.ms = (time.perf_counter() - t0) * 1000
        return res

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(timed, names))
    else:
        results = [timed(n) for n in names]
    return TheoremReport(R.descriptor, results)


# ---------------------------------------------------------------------------
# counterexample replay
# ---------------------------------------------------------------------------


def reproduce(R: Ring, result: CheckResult) -> bool:
    """Re-evaluate a failure payload from scratch; True iff the failure recurs."""
    ce = result.counterexample
    if ce is None:
        return False
    m = R.mul

    def el(key):
        return R.index(ce[key])

    if result.name == "centrality":
        e = el("e")
        a = R.elements()
        central = bool(np.array_equal(m(e, a), m(a, e)))
        idem = a[m(a, a) == a]
        commutes = bool(np.array_equal(m(e, idem), m(idem, e)))
        return central != commutes
    if result.name == "companions":
        e = el("e")
        if ce["b"] is None:
            a = R.elements()
            return not np.array_equal(m(e, a), m(a, e)) and noncentrality_witness(R, e) is None
        b = el("b")
        ebe = m(m(e, b), e)
        u, v = R.sub(m(b, e), ebe), R.sub(m(e, b), ebe)
        el_, er = R.add(e, u), R.add(e, v)
        ok = (m(u, u) == 0 and m(v, v) == 0 and m(e, el_) == e and m(el_, e) == el_ and m(e, er) == er
              and m(er, e) == e and m(el_, el_) == el_ and m(er, er) == er and (el_ != e or er != e))
        return not ok
    if result.name == "classes":
        e, x = el("e"), el("x")
        idem = R.elements()[m(R.elements(), R.elements()) == R.elements()]
        out_rel = m(e, x) == e and m(x, e) == x
        in_rel = m(e, x) == x and m(x, e) == e
        if ce["kind"] == "intersection":
            return out_rel and in_rel and x != e
        if ce["kind"].endswith("idempotence"):
            rel = out_rel if ce["kind"].startswith("out") else in_rel
            return rel and m(x, x) != x
        if ce["kind"] == "out":
            graph_eq = np.array_equal(m(e, idem) == 0, m(x, idem) == 0)
            return graph_eq != out_rel
        graph_eq = np.array_equal(m(idem, e) == 0, m(idem, x) == 0)
        return graph_eq != in_rel
    if result.name == "automorphism":
        e1, e2 = el("e1"), el("e2")
        kind = Kind(ce["kind"])
        u = R.sub(e2, e1)
        if m(u, u) != 0:
            return True
        direction = Direction.FORWARD if kind is Kind.OUT else Direction.REVERSE
        sigma = from_square_zero(R, u, direction, validate=False)
        if sigma(e1) != e2 or sigma.violations(exhaustive=R.size <= EXHAUSTIVE_LIMIT):
            return True
        try:
            induced_graph_map(sigma, build_graph(R))
        except RingError:
            return True
        return False
    if result.name == "counting":
        e = el("e")
        members = _all_element_class(R, e, Kind(ce["kind"]))
        if not is_power_of(len(members), R.field.q):
            return True
        rep = span_basis(R, IdempotentClass(e, Kind(ce["kind"]), members))
        return not rep.ok
    raise ValueError(f"unknown check {result.name}")
