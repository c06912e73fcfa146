"""Command-line front end.

Subcommands cover the whole pipeline: canonical forms and self-intersection
numbers, orbit enumeration/counting/verification, classification by
self-intersection, metric construction, length spectra, coefficient
estimates, experiment series, formula fitting, and the conjecture suites.
Exit status: 0 on success, 1 on a failed check or a domain error, 2 on
usage errors.  With --out, results are also written as CSV/JSON files plus
a manifest.json recording the run.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from importlib import metadata
from pathlib import Path

from .errors import HoledTorusError
from .experiments import (
    conjecture_checks,
    coefficient_estimate,
    length_spectrum,
    ratio_report,
    series_bundle,
)
from .formulas import builtin_formula_table, fit_orbit, verify_formula
from .geometry import MetricParams, build_metric, geodesic_length
from .intersect import self_intersection
from .orbits import classify, count_series, enumerate_orbit
from .words import canonical, reduce_word


def fmt(x):
    """Floats with 17 significant digits, everything else as str."""
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


class Run:
    """Output collector: prints to stdout and, with --out, writes files
    plus a manifest of the run."""

    def __init__(self, args):
        self.args = args
        self.out = Path(args.out) if getattr(args, "out", None) else None
        self.files = []
        if self.out:
            self.out.mkdir(parents=True, exist_ok=True)

    def emit(self, line=""):
        print(line)

    def write_csv(self, name, header, rows):
        if not self.out:
            return
        path = self.out / name
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(header)
            for row in rows:
                w.writerow([fmt(v) for v in row])
        self.files.append(name)

    def write_json(self, name, obj):
        if not self.out:
            return
        (self.out / name).write_text(json.dumps(obj, indent=2, default=fmt) + "\n")
        self.files.append(name)

    def finish(self, status):
        if self.out:
            manifest = {
                "command": self.args.command,
                "args": {
                    k: v for k, v in vars(self.args).items()
                    if k not in ("func",) and v is not None
                },
                "version": metadata.version("holedtorus"),
                "python": sys.version.split()[0],
                "outputs": self.files,
                "status": status,
            }
            (self.out / "manifest.json").write_text(
                json.dumps(manifest, indent=2, default=str) + "\n"
            )
        return status


def metric_from_args(args):
    if getattr(args, "metric", None):
        doc = json.loads(Path(args.metric).read_text())
        return MetricParams(doc["l1"], doc["l2"], doc["l3"])
    if args.l1 is None or args.l2 is None or args.l3 is None:
        raise SystemExit2("provide --l1 --l2 --l3 or --metric JSON file")
    return MetricParams(args.l1, args.l2, args.l3)


class SystemExit2(Exception):
    """Usage error detected after parsing."""


def cmd_si(args, run):
    key = canonical(reduce_word(args.word))
    run.emit(str(self_intersection(key)))
    return 0


def cmd_canon(args, run):
    run.emit(canonical(reduce_word(args.word)))
    return 0


def cmd_orbit(args, run):
    if args.action == "enumerate":
        orbit = enumerate_orbit(args.seed, args.max_wl, workers=args.workers)
        for member in orbit.members:
            run.emit(member)
        run.write_csv("members.csv", ["class"], [[m] for m in orbit.members])
        return 0
    if args.action == "counts":
        orbit = enumerate_orbit(args.seed, args.max_wl, workers=args.workers)
        rows = count_series(orbit).rows()
        for l, c, tot in rows:
            run.emit(f"{l},{c},{tot}")
        run.write_csv("counts.csv", ["wordlength", "count", "cumulative"], rows)
        return 0
    # verify
    report = verify_formula(args.seed, args.max_wl, workers=args.workers)
    for note in report.boundary_notes:
        run.emit(f"note: {note}")
    for l, counted, predicted in report.mismatches:
        run.emit(f"mismatch at wl {l}: counted {counted}, formula {predicted}")
    run.emit("PASS" if report.ok else "FAIL")
    return 0 if report.ok else 1


def cmd_classify(args, run):
    orbits = classify(args.si, args.max_wl)
    rows = [[o.seed, len(o.members)] for o in orbits]
    for seed, size in rows:
        run.emit(f"{seed} ({size} classes up to wl {args.max_wl})")
    run.emit(f"{len(orbits)} orbits of self-intersection {args.si}")
    run.write_csv("orbits.csv", ["seed", "members"], rows)
    return 0


def cmd_metric(args, run):
    rep = build_metric(metric_from_args(args))
    doc = {
        "params": {"l1": rep.params.l1, "l2": rep.params.l2, "l3": rep.params.l3},
        "placement": rep.placement,
        "c": rep.c,
        "A": rep.A,
        "B": rep.B,
        "Y": [rep.Y.real, rep.Y.imag],
        "O": [rep.O.real, rep.O.imag],
        "G": [rep.G.real, rep.G.imag],
        "boundary_length": geodesic_length(rep, "abAB"),
    }
    run.emit(json.dumps(doc, indent=2, default=fmt))
    run.write_json("metric.json", doc)
    return 0


def cmd_spectrum(args, run):
    sp = length_spectrum(
        args.seed, metric_from_args(args), args.max_gl,
        word_cap=args.max_wl, workers=args.workers,
    )
    rows = [
        (k, length, len(word), word)
        for k, (length, word) in enumerate(sp.entries, start=1)
    ]
    for row in rows[: args.head or len(rows)]:
        run.emit(",".join(fmt(v) for v in row))
    run.emit(f"u={fmt(sp.u)} M={fmt(sp.M)} T={sp.T}")
    run.write_csv("spectrum.csv", ["k", "length", "wordlength", "class"], rows)
    return 0


def cmd_coeffs(args, run):
    metrics = [MetricParams(*triple) for triple in args.metrics]
    rows = ratio_report(args.seeds, metrics, L=args.max_gl, workers=args.workers)
    header = ["seed", "l1", "l2", "l3", "u", "M", "T", "h", "ratio",
              "implied_p", "table_p", "rel_error"]
    flat = [
        [r["seed"], *r["metric"], r["u"], r["M"], r["T"], r["h"], r["ratio"],
         r["implied_p"],
         float(r["table_p"]) if r["table_p"] is not None else "",
         r["rel_error"] if r["rel_error"] is not None else ""]
        for r in rows
    ]
    run.emit(",".join(header))
    for row in flat:
        run.emit(",".join(fmt(v) for v in row))
    run.write_csv("ratios.csv", header, flat)
    return 0


def cmd_series(args, run):
    sp = length_spectrum(
        args.seed, metric_from_args(args), args.max_gl,
        word_cap=args.max_wl, workers=args.workers,
    )
    bundle = series_bundle(sp)
    which = {"i": ("mirzakhani.csv", ["length", "count", "fit"], bundle.mirzakhani),
             "ii": ("inverse.csv", ["k", "length", "fit"], bundle.inverse),
             "iii": ("residual.csv", ["k", "value"], bundle.residual)}[args.which]
    name, header, rows = which
    run.emit(",".join(header))
    for row in rows:
        run.emit(",".join(fmt(v) for v in row))
    run.write_csv(name, header, rows)
    return 0


def cmd_fit(args, run):
    fitted = fit_orbit(args.seed, args.max_wl, workers=args.workers)
    run.emit(f"terms: {list(fitted.terms)}")
    run.emit(f"support: wl = {fitted.support[1]} mod {fitted.support[0]}")
    run.emit(f"threshold: {fitted.threshold}")
    run.emit(f"specials: {dict(fitted.specials)}")
    run.emit(f"p: {fitted.p}")
    table = builtin_formula_table()
    doc = {
        "seed": args.seed,
        "terms": [list(t) for t in fitted.terms],
        "support": list(fitted.support),
        "threshold": fitted.threshold,
        "specials": dict((str(l), c) for l, c in fitted.specials),
        "p": str(fitted.p),
        "in_builtin_table": args.seed in table,
    }
    run.write_json("fit.json", doc)
    return 0


def cmd_conjectures(args, run):
    report = conjecture_checks(args.suite, workers=args.workers)
    for r in report.c1:
        run.emit(
            f"C1 {r['seed']} metric={r['metric']} implied_p={fmt(r['implied_p'])} "
            f"table_p={r['table_p']} rel_error={fmt(r['rel_error'])} "
            f"{'pass' if r['pass'] else 'FAIL'}"
        )
    for r in report.c2:
        run.emit(f"C2 {r['seed']} metric={r['metric']} "
                 f"max_dev={fmt(r['max_dev'])} tail_dev={fmt(r['tail_dev'])} (report)")
    for r in report.c3:
        run.emit(f"C3 {r['seed']} metric={r['metric']} "
                 f"max_dev={fmt(r['max_dev'])} relative={fmt(r['relative'])} (report)")
    for r in report.c4:
        state = "pass" if r["pass"] else ("flagged" if r["flagged"] else "FAIL")
        run.emit(f"C4 {r['seed']} fitted={r['fitted_terms']} "
                 f"table={r['table_terms']} {state}")
    for r in report.c5:
        run.emit(f"C5 si={r['si']} sum_p={r['sum_p']} orbits={r['orbits']} "
                 f"gap={r['gap']} {'pass' if r['pass'] else 'FAIL'}")
    ok = report.passed()
    run.emit("PASS" if ok else "FAIL")
    run.write_json("conjectures.json", {
        "c1": report.c1, "c2": report.c2, "c3": report.c3,
        "c4": report.c4, "c5": report.c5, "passed": ok,
    })
    return 0 if ok else 1


def _triple(text):
    parts = [float(x) for x in text.split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("metric must be l1,l2,l3")
    return tuple(parts)


def build_parser():
    p = argparse.ArgumentParser(
        prog="holedtorus",
        description="Orbits of curves on the one-holed torus: enumeration, "
        "counting formulas, and hyperbolic length spectra.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, workers=True, out=True):
        if workers:
            sp.add_argument("--workers", type=int, default=1)
        if out:
            sp.add_argument("--out", help="directory for CSV/JSON outputs")

    def metric_opts(sp):
        sp.add_argument("--l1", type=float)
        sp.add_argument("--l2", type=float)
        sp.add_argument("--l3", type=float)
        sp.add_argument("--metric", help="JSON file with l1, l2, l3")

    s = sub.add_parser("si", help="self-intersection number of a word")
    s.add_argument("word")
    common(s, workers=False)
    s.set_defaults(func=cmd_si)

    s = sub.add_parser("canon", help="canonical unoriented class key")
    s.add_argument("word")
    common(s, workers=False)
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("orbit", help="enumerate, count, or verify an orbit")
    s.add_argument("action", choices=["enumerate", "counts", "verify"])
    s.add_argument("--seed", required=True)
    s.add_argument("--max-wl", type=int, required=True)
    common(s)
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("classify", help="orbit partition at one si value")
    s.add_argument("--si", type=int, required=True)
    s.add_argument("--max-wl", type=int, required=True)
    common(s)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("metric", help="build a metric representation")
    s.add_argument("action", choices=["build"])
    metric_opts(s)
    common(s, workers=False)
    s.set_defaults(func=cmd_metric)

    s = sub.add_parser("spectrum", help="geodesic length spectrum of an orbit")
    s.add_argument("--seed", required=True)
    metric_opts(s)
    s.add_argument("--max-gl", type=float, required=True)
    s.add_argument("--max-wl", type=int, help="override the word-length cap")
    s.add_argument("--head", type=int, help="print only the first N rows")
    common(s)
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("coeffs", help="coefficient ratio report")
    s.add_argument("--seeds", nargs="+", required=True)
    s.add_argument("--metrics", nargs="+", type=_triple, required=True,
                   metavar="L1,L2,L3")
    s.add_argument("--max-gl", type=float, help="default 100/c per metric")
    common(s)
    s.set_defaults(func=cmd_coeffs)

    s = sub.add_parser("series", help="experiment series for one spectrum")
    s.add_argument("--seed", required=True)
    metric_opts(s)
    s.add_argument("--max-gl", type=float, required=True)
    s.add_argument("--max-wl", type=int)
    s.add_argument("--which", choices=["i", "ii", "iii"], required=True)
    common(s)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("fit", help="fit a totient formula to an orbit")
    s.add_argument("--seed", required=True)
    s.add_argument("--max-wl", type=int, default=40)
    common(s)
    s.set_defaults(func=cmd_fit)

    s = sub.add_parser("conjectures", help="run the conjecture check suite")
    s.add_argument("--suite", choices=["desk", "full"], default="desk")
    common(s)
    s.set_defaults(func=cmd_conjectures)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    run = Run(args)
    try:
        status = args.func(args, run)
    except SystemExit2 as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (HoledTorusError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return run.finish(1)
    return run.finish(status)


if __name__ == "__main__":
    sys.exit(main())
