#!/usr/bin/env python3
"""Seeded Haar Monte Carlo battery over all three convolutions; writes a JSON report."""

import argparse
import json
import os
import sys
from collections import Counter

from freeconv.matrix_lab import BatteryConfig, battery_json, run_battery


def main() -> int:
    defaults = BatteryConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, default=defaults.n_cases)
    ap.add_argument("--n", type=int, default=defaults.n_samples, help="samples per case")
    ap.add_argument("--seed", type=int, default=defaults.seed)
    ap.add_argument("--dims", type=int, nargs="+", default=list(defaults.dims))
    ap.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--out", help="JSON destination (default: stdout)")
    args = ap.parse_args()

    config = BatteryConfig(n_cases=args.cases, n_samples=args.n, seed=args.seed, dims=tuple(args.dims))
    reports = run_battery(config, threads=args.threads)
    report = battery_json(reports, config)

    worst = max((abs(r.z_score) for r in reports), default=0.0)
    tally = Counter((r.kind, r.passed) for r in reports)
    for kind in config.kinds:
        print(f"{kind:5s} pass={tally[kind, True]} fail={tally[kind, False]}", file=sys.stderr)
    print(f"max |z| = {worst:.3f}", file=sys.stderr)

    text = json.dumps(report, indent=2, default=str)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    raise SystemExit(main())
