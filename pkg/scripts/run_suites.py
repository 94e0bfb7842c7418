#!/usr/bin/env python3
"""Run the verification suites and write one JSON report per suite.

Example:
    python3 scripts/run_suites.py --out reports/ --suites all
    python3 scripts/run_suites.py --suites path-cycle stability --max-n 12
"""

import argparse
import json
import pathlib
import sys

from rainbowdom.suites import SUITES


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="reports", help="output directory")
    ap.add_argument("--suites", nargs="+", default=["all"],
                    help="suite names, or 'all'")
    ap.add_argument("--max-n", type=int, default=None,
                    help="override order cap for order-swept suites")
    ap.add_argument("--trials", type=int, default=None,
                    help="override trial count for randomized suites")
    ap.add_argument("--seed", type=int, default=None,
                    help="override RNG seed for randomized suites")
    ap.add_argument("--timing", action="store_true",
                    help="include wall-clock seconds in the JSON reports")
    args = ap.parse_args()

    names = list(SUITES) if "all" in args.suites else args.suites
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        ap.error(f"unknown suites: {', '.join(unknown)}")

    outdir = pathlib.Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)

    order_swept = {"path-cycle", "diameter-extremal", "stability",
                   "er-critical", "minfunction-structure", "unicyclic"}
    failed = []
    for name in names:
        kwargs = {}
        if name in order_swept and args.max_n is not None:
            kwargs["max_n"] = args.max_n
        if name in ("gadget-props", "removal-bounds"):
            if args.trials is not None:
                kwargs["trials"] = args.trials
            if args.seed is not None:
                kwargs["seed"] = args.seed
        if name == "removal-bounds" and args.max_n is not None:
            kwargs["max_tree_n"] = args.max_n

        report = SUITES[name](**kwargs)
        path = outdir / f"{name}.json"
        path.write_text(
            json.dumps(report.to_json(include_timing=args.timing),
                       indent=2, sort_keys=True) + "\n"
        )
        print(f"{name:24s} {report.status:8s} checks={report.checks:<6d} "
              f"failures={len(report.failures):<4d} {report.seconds:6.2f}s  -> {path}")
        if report.assertive and report.failures:
            failed.append(name)

    if failed:
        print(f"FAILED: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
