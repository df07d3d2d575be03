"""Sweep symmetric presentations and check that RF-relations minimally generate I(H).

    python3 scripts/sweep_theorems.py --p 2 3 --m0 5 40 --d 1 10 --jobs 4 --out sweep.jsonl

Writes one JSON line per symmetric presentation and prints a per-case summary.
"""
import argparse
import collections
import json
import sys
import time
from dataclasses import dataclass

from aarf.toric import SweepBox, counterexamples, verify_symmetric_sweep


@dataclass
class SweepConfig:
    p: tuple = (2, 3)
    m0: tuple = (5, 40)
    d: tuple = (1, 10)
    jobs: int = 1
    out: str = ""


def parse() -> SweepConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--m0", type=int, nargs=2, default=[5, 40])
    ap.add_argument("--d", type=int, nargs=2, default=[1, 10])
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="")
    a = ap.parse_args()
    return SweepConfig(tuple(a.p), tuple(a.m0), tuple(a.d), a.jobs, a.out)


def main():
    cfg = parse()
    sink = open(cfg.out, "w") if cfg.out else None
    rows = []
    for p in cfg.p:
        t0 = time.perf_counter()
        box = SweepBox(range(cfg.m0[0], cfg.m0[1] + 1), range(cfg.d[0], cfg.d[1] + 1), range(p, p + 1))
        part = verify_symmetric_sweep(box, jobs=cfg.jobs)
        rows += part
        by_case = collections.Counter((r["case"], r["mu"]) for r in part)
        held = sum(r["holds"] for r in part)
        print(f"p={p}: {len(part)} symmetric, {held} hold, {time.perf_counter() - t0:.1f}s")
        for (case, mu), k in sorted(by_case.items()):
            print(f"    {case:<12} mu={mu:<3} {k}")
    if sink:
        for r in rows:
            sink.write(json.dumps(r, sort_keys=True) + "\n")
        sink.close()
    bad = counterexamples(rows)
    for r in bad:
        print("counterexample:", r, file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
