#!/usr/bin/env python3
"""Tabulate quadrature checks for several groups and dimensions."""

import argparse
import time

from freeconv.quadrature import GroupSpec, verify_quadrature

DEFAULT_GROUPS = ["unitary", "orthogonal", "signed:2", "signed:3", "signed:inf"]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--groups", nargs="+", default=DEFAULT_GROUPS)
    ap.add_argument("--dmax", type=int, default=4)
    ap.add_argument("--kmax", type=int, default=3, help="cap on k (also capped by d)")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    ok = True
    print(f"{'group':12s} {'d':>2s} {'kmax':>4s} {'cases':>6s} {'failures':>8s} {'seconds':>8s}")
    for label in args.groups:
        for d in range(1, args.dmax + 1):
            g = GroupSpec.parse(label, d)
            kmax = min(d, args.kmax)
            start = time.perf_counter()
            report = verify_quadrature(g, kmax, threads=args.threads)
            elapsed = time.perf_counter() - start
            bad = len(report.failures())
            ok &= bad == 0
            print(f"{label:12s} {d:2d} {kmax:4d} {len(report.cases):6d} {bad:8d} {elapsed:8.2f}")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
