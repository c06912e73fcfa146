#!/usr/bin/env python3
"""Estimate per-orbit growth coefficients from geodesic length spectra and
compare the implied p against the formula table.

    python3 scripts/run_ratios.py --word-cap 120
"""

import argparse

from holedtorus.experiments import PAPER_METRICS, ratio_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", nargs="+",
                    default=["a", "aabAB", "abaB", "aaabb", "aabaB"])
    ap.add_argument("--word-cap", type=int, default=120)
    ap.add_argument("--all-metrics", action="store_true",
                    help="use both reference metrics instead of just one")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    metrics = PAPER_METRICS if args.all_metrics else PAPER_METRICS[:1]
    rows = ratio_report(args.seeds, metrics, word_cap=args.word_cap,
                        workers=args.workers)
    print("seed,metric,T,u,h,ratio,implied_p,table_p,rel_error")
    for r in rows:
        rel = "" if r["rel_error"] is None else f"{r['rel_error']:.4f}"
        print(f"{r['seed']},{r['metric']},{r['T']},{r['u']:.6f},"
              f"{r['h']:.6f},{r['ratio']:.6f},{r['implied_p']:.6f},"
              f"{r['table_p']},{rel}")


if __name__ == "__main__":
    main()
