#!/usr/bin/env python3
"""Classify canonical classes into orbits by self-intersection number.

    python3 scripts/run_classification.py --max-si 3 --max-wl 13
"""

import argparse

from holedtorus.orbits import classify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-si", type=int, default=3)
    ap.add_argument("--max-wl", type=int, default=13)
    args = ap.parse_args()

    for k in range(args.max_si + 1):
        orbits = classify(k, args.max_wl)
        print(f"si = {k}: {len(orbits)} orbits (classes up to wl {args.max_wl})")
        for o in orbits:
            print(f"  {o.seed}  ({len(o.members)} classes)")


if __name__ == "__main__":
    main()
