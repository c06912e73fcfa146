#!/usr/bin/env python3
"""Run the executable conjecture checks and print a summary.

    python3 scripts/run_conjectures.py --suite desk

The desk suite uses one metric and moderate caps; the full suite uses both
reference metrics and tighter tolerances, and takes substantially longer.
"""

import argparse
import sys

from holedtorus.experiments import conjecture_checks


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", choices=["desk", "full"], default="desk")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    report = conjecture_checks(suite=args.suite, workers=args.workers)
    for r in report.c1:
        print(f"C1 {r['seed']} @ {r['metric']}: implied_p={r['implied_p']:.4f} "
              f"table_p={r['table_p']} rel={r['rel_error']:.4f} "
              f"{'PASS' if r['pass'] else 'FAIL'}")
    for r in report.c2:
        print(f"C2 {r['seed']} @ {r['metric']}: max_dev={r['max_dev']:.4f} "
              f"tail_dev={r['tail_dev']:.4f}")
    for r in report.c3:
        print(f"C3 {r['seed']} @ {r['metric']}: max_dev={r['max_dev']:.2f} "
              f"relative={r['relative']:.4f}")
    for r in report.c4:
        flag = " (flagged)" if r["flagged"] else ""
        print(f"C4 {r['seed']}: {'PASS' if r['pass'] else 'FAIL'}{flag}")
    for r in report.c5:
        print(f"C5 si={r['si']}: sum_p={r['sum_p']} orbits={r['orbits']} "
              f"gap={float(r['gap']):.4f} {'PASS' if r['pass'] else 'FAIL'}")
    for note in report.notes:
        print(f"note: {note}")
    ok = report.passed()
    print("overall:", "PASS" if ok else "FAIL")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
