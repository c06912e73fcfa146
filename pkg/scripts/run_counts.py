#!/usr/bin/env python3
"""Enumerate an orbit, print its count series, and check it against the
builtin formula table when the seed has a known row.

    python3 scripts/run_counts.py --seed aabAB --max-wl 40
"""

import argparse

from holedtorus.formulas import builtin_formula_table, verify_formula
from holedtorus.orbits import count_series, enumerate_orbit


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", default="a")
    ap.add_argument("--max-wl", type=int, default=40)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    orbit = enumerate_orbit(args.seed, args.max_wl, workers=args.workers)
    series = count_series(orbit)
    print(f"orbit of {args.seed}: {len(orbit.members)} classes up to wl {args.max_wl}")
    print("wl,count,cumulative")
    for row in series.rows():
        print(",".join(map(str, row)))

    if orbit.seed in builtin_formula_table():
        report = verify_formula(orbit.seed, args.max_wl, workers=args.workers)
        for note in report.boundary_notes:
            print(f"note: {note}")
        for l, counted, predicted in report.mismatches:
            print(f"mismatch at wl {l}: counted {counted}, formula {predicted}")
        print("formula check:", "PASS" if report.ok else "FAIL")


if __name__ == "__main__":
    main()
