"""Run every theorem check over a seeded battery of random algebras.

    python3 scripts/random_battery.py [--count 100] [--seed 20261016]
"""
import argparse
import time
from collections import Counter
from dataclasses import dataclass

from idemring import enumerate_idempotents, run_all
from idemring.randalg import random_battery


@dataclass
class BatteryConfig:
    count: int = 100
    seed: int = 20261016
    verbose: bool = False


def main(cfg: BatteryConfig) -> int:
    t0 = time.perf_counter()
    algebras = random_battery(cfg.count, cfg.seed)
    statuses = Counter()
    failed = []
    for A in algebras:
        rep = run_all(A)
        for c in rep.checks:
            statuses[(c.name, c.status)] += 1
        if not rep.passed:
            failed.append(rep)
        if cfg.verbose:
            print(f"{A.descriptor:40} |R|={A.size:<5} idempotents={len(enumerate_idempotents(A)):<4} "
                  f"{'ok' if rep.passed else 'FAIL'}")
    dt = time.perf_counter() - t0
    print(f"{len(algebras)} algebras (seed {cfg.seed}) in {dt:.1f}s")
    for (name, status), n in sorted(statuses.items()):
        print(f"  {name:13} {status:8} {n}")
    for rep in failed:
        print(rep.format())
    return 1 if failed else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=20261016)
    ap.add_argument("-v", "--verbose", action="store_true")
    a = ap.parse_args()
    raise SystemExit(main(BatteryConfig(a.count, a.seed, a.verbose)))
