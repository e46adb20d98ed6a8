"""Idempotent census and class structure for a fixed set of small rings.

    python3 scripts/census.py [--exhaustive]

Prints one row per ring: size, idempotents, central idempotents, the
out/in class-size multisets, and whether every theorem check passed.
"""
import argparse
import time
from collections import Counter
from dataclasses import dataclass, field

from idemring import (
    build_group_algebra,
    build_matrix_algebra,
    build_upper_triangular,
    build_zn,
    build_zn_matrix,
    enumerate_idempotents,
    make_field,
    partition_in,
    partition_out,
    run_all,
)
from idemring.idempotents import central_flags
from idemring.randalg import small_groups


@dataclass
class CensusConfig:
    exhaustive: bool = False
    jobs: int = 1
    rings: list = field(default_factory=lambda: [
        ("Z/6", lambda: build_zn(6)),
        ("Z/30", lambda: build_zn(30)),
        ("M_2(F_2)", lambda: build_matrix_algebra(make_field(2), 2)),
        ("M_2(F_3)", lambda: build_matrix_algebra(make_field(3), 2)),
        ("M_2(F_4)", lambda: build_matrix_algebra(make_field(2, 2), 2)),
        ("M_3(F_2)", lambda: build_matrix_algebra(make_field(2), 3)),
        ("T_2(F_2)", lambda: build_upper_triangular(make_field(2), 2)),
        ("T_3(F_2)", lambda: build_upper_triangular(make_field(2), 3)),
        ("T_2(F_3)", lambda: build_upper_triangular(make_field(3), 2)),
        ("M_2(Z/4)", lambda: build_zn_matrix(4, 2)),
        ("F_2[S3]", lambda: build_group_algebra(make_field(2), small_groups()["S3"])),
        ("F_3[S3]", lambda: build_group_algebra(make_field(3), small_groups()["S3"])),
    ])


def sizes(classes):
    return " ".join(f"{s}x{n}" for s, n in sorted(Counter(len(c) for c in classes).items()))


def main(cfg: CensusConfig):
    print(f"{'ring':10} {'|R|':>6} {'idem':>5} {'central':>7}  {'out-class sizes':22} {'in-class sizes':22} checks  time")
    for name, make in cfg.rings:
        t0 = time.perf_counter()
        R = make()
        idem = enumerate_idempotents(R)
        central = int(central_flags(R, idem).sum())
        rep = run_all(R, workers=cfg.jobs, exhaustive=cfg.exhaustive or None)
        status = "ok" if rep.passed else "FAIL"
        dt = time.perf_counter() - t0
        print(f"{name:10} {R.size:>6} {len(idem):>5} {central:>7}  {sizes(partition_out(R)):22} "
              f"{sizes(partition_in(R)):22} {status:6} {dt:5.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--exhaustive", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    a = ap.parse_args()
    main(CensusConfig(exhaustive=a.exhaustive, jobs=a.jobs))
