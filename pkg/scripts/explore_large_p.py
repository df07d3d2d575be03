"""Exploratory: does the RF-relation property persist for symmetric presentations with p >= 4?

Nothing is claimed for these p; the script just reports what happens.

    python3 scripts/explore_large_p.py --p 4 5 --m0 5 30
"""
import argparse
import collections

from aarf.toric import SweepBox, verify_symmetric_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--m0", type=int, nargs=2, default=[5, 30])
    ap.add_argument("--d", type=int, nargs=2, default=[1, 8])
    ap.add_argument("--jobs", type=int, default=1)
    a = ap.parse_args()
    for p in a.p:
        box = SweepBox(range(a.m0[0], a.m0[1] + 1), range(a.d[0], a.d[1] + 1), range(p, p + 1))
        rows = verify_symmetric_sweep(box, jobs=a.jobs)
        tally = collections.Counter((r["case"], r["holds"]) for r in rows)
        print(f"p={p}: {len(rows)} symmetric presentations")
        for (case, holds), k in sorted(tally.items()):
            print(f"    {case:<12} holds={holds!s:<5} {k}")
        fails = [r for r in rows if not r["holds"]]
        for r in fails[:10]:
            print(f"    fails: gens={r['gens']} mu={r['mu']} deficient degrees={r['deficiency']}")


if __name__ == "__main__":
    main()
