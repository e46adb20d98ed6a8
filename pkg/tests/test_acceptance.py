"""Acceptance criteria 1-8, each printed as one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``; the lines appear in
the terminal even without ``-s``.
"""
import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest

import oracles
from conftest import mu
from idemring import (
    build_graph,
    build_group_algebra,
    build_matrix_algebra,
    build_upper_triangular,
    build_zn,
    build_zn_matrix,
    commutes_with_all_idempotents,
    enumerate_idempotents,
    in_class,
    is_central,
    make_field,
    out_class,
    partition_in,
    partition_out,
    span_basis,
)
from idemring.errors import RingError
from idemring.graph import graph_partition_in, graph_partition_out
from idemring.idempotents import build_companion_pair, companion_violations, noncentrality_witness
from idemring.inner import connect_pair, induced_graph_map, stabilizer_family
from idemring.randalg import random_battery, small_groups
from idemring.theorems import is_power_of, run_all


@pytest.fixture
def report(capsys):
    def emit(criterion, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
        assert ok, detail
    return emit


def census_rings():
    F2, F3, F4 = make_field(2), make_field(3), make_field(2, 2)
    return {
        "Z/6": build_zn(6),
        "M_2(F_2)": build_matrix_algebra(F2, 2),
        "M_2(F_3)": build_matrix_algebra(F3, 2),
        "M_2(F_4)": build_matrix_algebra(F4, 2),
        "T_2(F_2)": build_upper_triangular(F2, 2),
        "M_3(F_2)": build_matrix_algebra(F2, 3),
    }


def battery():
    rings = dict(census_rings())
    F2, F3 = make_field(2), make_field(3)
    rings["T_3(F_2)"] = build_upper_triangular(F2, 3)
    rings["T_2(F_3)"] = build_upper_triangular(F3, 2)
    rings["Z/5"] = build_zn(5)
    rings["Z/12"] = build_zn(12)
    rings["M_2(Z/4)"] = build_zn_matrix(4, 2)
    rings["F_2[S3]"] = build_group_algebra(F2, small_groups()["S3"], "F_2[S3]")
    rings["F_3[C2xC2]"] = build_group_algebra(F3, small_groups()["C2xC2"], "F_3[C2xC2]")
    return rings


# -- criterion 1 ---------------------------------------------------------------


def census_oracle(name):
    F = {"F_2": oracles.PrimeField(2), "F_3": oracles.PrimeField(3), "F_4": oracles.GF4()}
    if name == "Z/6":
        return oracles.zn_ring(6)
    k, field = int(name[2]), name[4:7]
    return oracles.matrix_ring(F[field], k, upper=name.startswith("T"))


EXPECTED_CENSUS = {"Z/6": 4, "M_2(F_2)": 8, "M_2(F_3)": 14, "M_2(F_4)": 22, "T_2(F_2)": 6, "M_3(F_2)": 58}


def test_criterion_1_census(report):
    problems, times = [], {}
    for name, want in EXPECTED_CENSUS.items():
        elems, mul, idx = census_oracle(name)
        t0 = time.perf_counter()
        brute = sorted(idx(x) for x in oracles.idempotents(elems, mul))
        oracle_s = time.perf_counter() - t0
        t0 = time.perf_counter()
        R = census_rings()[name]
        got = enumerate_idempotents(R).tolist()
        lib_s = time.perf_counter() - t0
        times[name] = round(lib_s, 3)
        if got != brute or len(got) != want:
            problems.append(f"{name}: got {len(got)}, oracle {len(brute)}, expected {want}")
        limit = 5.0 if name == "M_3(F_2)" else 1.0
        if lib_s >= limit or oracle_s >= limit:
            problems.append(f"{name}: {lib_s:.2f}s / oracle {oracle_s:.2f}s over {limit}s")
    z6 = enumerate_idempotents(build_zn(6)).tolist()
    if z6 != [0, 1, 3, 4]:
        problems.append(f"Z/6 set {z6}")
    report(1, not problems, "; ".join(problems) or f"all six censuses exact, seconds {times}")


# -- criterion 2 ---------------------------------------------------------------


def test_criterion_2_centrality_biconditional(report):
    problems, checked = [], 0
    for name, R in census_rings().items():
        a = R.elements()
        for e in enumerate_idempotents(R).tolist():
            central = bool(np.array_equal(R.mul(e, a), R.mul(a, e)))  # two-sided scan over all of R
            if central != commutes_with_all_idempotents(R, e) or central != is_central(R, e, exhaustive=True):
                problems.append(f"{name}: e={e}")
            checked += 1
    report(2, not problems, "; ".join(problems) or f"biconditional holds for {checked} idempotents")


# -- criterion 3 ---------------------------------------------------------------


def test_criterion_3_companions(report):
    problems, checked = [], 0
    for name, R in battery().items():
        for e in enumerate_idempotents(R).tolist():
            if is_central(R, e, exhaustive=True):
                continue
            b = noncentrality_witness(R, e)
            if b is None:
                problems.append(f"{name}: no witness for e={e}")
                continue
            pair = build_companion_pair(R, e, b)
            bad = companion_violations(R, pair)
            if bad:
                problems.append(f"{name}: e={e} b={b} {bad}")
            checked += 1
    report(3, not problems, "; ".join(problems[:3]) or f"{checked} non-central idempotents, all relations hold")


# -- criterion 4 ---------------------------------------------------------------


def test_criterion_4_dual_oracle(report):
    problems = []
    for name, R in battery().items():
        g = build_graph(R)
        for graph_side, algebra_side in ((graph_partition_out(g), partition_out(R)),
                                         (graph_partition_in(g), partition_in(R))):
            gs = sorted(sorted(int(g.vertices[v]) for v in c) for c in graph_side)
            alg = sorted(list(c.members) for c in algebra_side)
            if gs != alg:
                problems.append(f"{name}: partitions differ")
        for e in g.vertices.tolist():
            if set(out_class(R, e).members) & set(in_class(R, e).members) != {e}:
                problems.append(f"{name}: I_e and O_e meet beyond e={e}")
    report(4, not problems, "; ".join(problems[:3]) or f"graph and relation partitions equal on {len(battery())} rings")


# -- criterion 5 ---------------------------------------------------------------


def test_criterion_5_inner_automorphisms(report):
    problems, pairs = [], 0
    for name, R in battery().items():
        if R.size > 4096:
            continue
        g = build_graph(R)
        for kind, part in (("out", partition_out(R)), ("in", partition_in(R))):
            for cls in part:
                for e1 in cls.members:
                    for e2 in cls.members:
                        try:
                            sigma = connect_pair(R, e1, e2, kind, exhaustive=True)
                            induced_graph_map(sigma, g)
                            if sigma(e1) != e2:
                                problems.append(f"{name} {kind}: {e1} sent to {sigma(e1)}")
                        except RingError as exc:
                            problems.append(f"{name} {kind} {e1}->{e2}: {exc}")
                        pairs += 1
                fam = stabilizer_family(R, cls.base, kind, exhaustive=True)
                sigs = {tuple(int(x) for x in s.mapping) for s in fam}
                if len(fam) != len(cls) or len(sigs) != len(cls):
                    problems.append(f"{name}: stabilizer family of {cls.base} has {len(sigs)} maps, class {len(cls)}")
    report(5, not problems, "; ".join(problems[:3]) or f"{pairs} ordered pairs verified exhaustively")


# -- criterion 6 ---------------------------------------------------------------


def test_criterion_6_counting(report):
    problems, classes = [], 0
    for name, R in battery().items():
        if not R.is_algebra:
            continue
        q = R.field.q
        for part in (partition_out(R), partition_in(R)):
            for cls in part:
                rep = span_basis(R, cls)
                classes += 1
                if not is_power_of(len(cls), q) or rep.predicted_size != len(cls) or not rep.ok:
                    problems.append(f"{name}: class of {cls.base} size {len(cls)} vs {rep.predicted_size} {rep.failures}")
    spots = []
    for name, k, upper in (("M_2(F_2)", 2, False), ("M_2(F_3)", 3, False), ("T_2(F_2)", 2, True)):
        elems, mul, idx = oracles.matrix_ring(oracles.PrimeField(k), 2, upper)
        e = oracles.unit(2, 0, 0)
        spots.append((len(oracles.out_class(elems, mul, e)), len(oracles.in_class(elems, mul, e))))
    rings = census_rings()
    lib = [
        (len(out_class(rings["M_2(F_2)"], mu(rings["M_2(F_2)"], 1, 1))),),
        (len(out_class(rings["M_2(F_3)"], mu(rings["M_2(F_3)"], 1, 1))),),
        (len(out_class(rings["T_2(F_2)"], mu(rings["T_2(F_2)"], 1, 1))),
         len(in_class(rings["T_2(F_2)"], mu(rings["T_2(F_2)"], 1, 1)))),
    ]
    if [s[0] for s in spots[:2]] != [2, 3] or spots[2] != (1, 2) or lib != [(2,), (3,), (1, 2)]:
        problems.append(f"spot values oracle {spots}, library {lib}")
    report(6, not problems, "; ".join(problems[:3]) or f"{classes} classes have size q^(n-1); spot values (2, 3, (1, 2)) match")


# -- criterion 7 ---------------------------------------------------------------


def test_criterion_7_random_battery(report):
    t0 = time.perf_counter()
    algebras = random_battery(100)
    failures = []
    for A in algebras:
        rep = run_all(A)
        if not rep.passed or A.size > 4096 or A.field.q not in (2, 3):
            failures.append(A.descriptor)
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60 and len(algebras) == 100
    report(7, ok, f"{len(algebras)} algebras, {len(failures)} failures {failures[:3]}, {elapsed:.1f}s (limit 60s)")


# -- criterion 8 ---------------------------------------------------------------


_DRIVER = """
import io, sys
from idemring.cli import main
jobs = sys.argv[1]
chunks = []
for spec in sys.argv[2:]:
    for cmd in (["graph", spec], ["graph", "--format", "json", spec], ["verify", spec], ["verify", "--json", spec]):
        buf = io.StringIO()
        code = main(["--jobs", jobs, *cmd], out=buf)
        chunks.append(f"{cmd} -> {code}\\n{buf.getvalue()}")
sys.stdout.write("".join(chunks))
"""


def test_criterion_8_determinism(report):
    specs = Path(__file__).resolve().parent.parent / "specs"
    files = [str(specs / n) for n in ("m2_f2.json", "m2_f3.json", "t2_f2.json", "zn6.json", "m2_z4.json")]
    outputs = {}
    for jobs in ("1", "8"):
        for rep in range(3):
            res = subprocess.run([sys.executable, "-c", _DRIVER, jobs, *files], capture_output=True, check=True)
            outputs[(jobs, rep)] = res.stdout
    distinct = len(set(outputs.values()))
    first = outputs[("1", 0)]
    report(8, distinct == 1 and len(first) > 0,
           f"{len(outputs)} runs (3 x jobs=1, 3 x jobs=8) over {len(files)} rings, {distinct} distinct output(s), "
           f"{len(first)} bytes")
