"""``freeconv`` command line: convolutions, tables, verification suites, samples.

Exit codes: 0 success, 2 bad input, 3 degree mismatch, 4 a check failed,
5 resource budget or supported range exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from .characters import character_table, zonal_table
from .errors import DegreeMismatchError, ResourceLimitError
from .finite_free import PolynomialFF, box_plus, box_times, format_rational, parse_rational, rect_plus
from .matrix_lab import sample_haar, verify_convolution
from .quadrature import DEFAULT_BUDGET, SIGNED, GroupSpec, verify_quadrature
from .weingarten import orthogonal_table, unitary_table

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGREE = 3
EXIT_FAILED = 4
EXIT_BUDGET = 5

CONV_OPERATORS = {"add": box_plus, "mult": box_times, "rectadd": rect_plus}
TABLE_KINDS = ("wg-unitary", "wg-orthogonal", "char", "zonal")
METHODS = ("exact-signed", "weingarten", "mc")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class CliConfig:
    command: str
    action: str = ""
    p: str | None = None
    q: str | None = None
    group: str | None = None
    d: int | None = None
    k: int | None = None
    kmax: int | None = None
    kind: str = "add"
    method: str = "exact-signed"
    n: int = 20000
    cases: int = 5
    seed: int = 0
    threads: int = 1
    budget: int = DEFAULT_BUDGET
    out: str | None = None

    def validate(self) -> None:
        for name in ("d", "kmax", "k"):
            value = getattr(self, name)
            if value is not None and value < (1 if name == "d" else 0):
                raise UsageError(f"--{name} out of range: {value}")
        if self.threads < 1:
            raise UsageError("--threads must be at least 1")
        if self.budget < 1:
            raise UsageError("--budget must be positive")
        if self.cases < 1:
            raise UsageError("--cases must be at least 1")
        if self.method == "mc" and self.n < 100:
            raise UsageError("--n must be at least 100 for Monte Carlo")


def parse_polynomial(text: str) -> PolynomialFF:
    """Inline JSON (``{"d":..,"a":[..]}`` or ``{"roots":[..]}``) or ``roots:1,2,3``."""
    text = text.strip()
    if text.startswith("roots:"):
        body = text[len("roots:"):].strip()
        roots = [parse_rational(r) for r in body.split(",")] if body else []
        return PolynomialFF.from_roots(roots)
    return PolynomialFF.from_json(text)


def _group(cfg: CliConfig, default: str) -> GroupSpec:
    if cfg.d is None:
        raise UsageError("--d is required")
    return GroupSpec.parse(cfg.group or default, cfg.d)


def cmd_conv(cfg: CliConfig) -> tuple[dict, int]:
    if cfg.p is None or cfg.q is None:
        raise UsageError("conv needs --p and --q")
    p, q = parse_polynomial(cfg.p), parse_polynomial(cfg.q)
    return CONV_OPERATORS[cfg.action](p, q).to_json(), EXIT_OK


def cmd_verify(cfg: CliConfig) -> tuple[dict, int]:
    if cfg.action == "quadrature":
        g = _group(cfg, "unitary")
        kmax = cfg.d if cfg.kmax is None else cfg.kmax
        if kmax > g.d:
            raise UsageError(f"--kmax {kmax} exceeds --d {g.d}")
        report = verify_quadrature(g, kmax, cfg.budget, cfg.threads)
        out = report.to_json()
        if g.is_finite:
            out["group_order"] = g.order()
        return out, EXIT_OK if report.passed else EXIT_FAILED
    kind = "rect" if cfg.kind == "rectadd" else cfg.kind
    g = _group(cfg, "signed:2" if cfg.method == "exact-signed" else "unitary")
    report = verify_convolution(kind, cfg.method, g.d, g, cfg.cases, cfg.seed, cfg.n, cfg.budget, cfg.threads)
    out = report.to_json()
    out["seed"] = cfg.seed
    return out, EXIT_OK if report.passed else EXIT_FAILED


def _stringify(table: dict) -> dict:
    return {key: _stringify(v) if isinstance(v, dict) else format_rational(v) for key, v in table.items()}


def cmd_table(cfg: CliConfig) -> tuple[dict, int]:
    if cfg.k is None:
        raise UsageError("table needs --k")
    if cfg.action in ("wg-unitary", "wg-orthogonal"):
        if cfg.d is None:
            raise UsageError(f"{cfg.action} needs --d")
        build = unitary_table if cfg.action == "wg-unitary" else orthogonal_table
        return _stringify(build(cfg.k, cfg.d).nested()), EXIT_OK
    if cfg.action == "char":
        return _stringify(character_table(cfg.k).nested()), EXIT_OK
    return _stringify(zonal_table(cfg.k).nested()), EXIT_OK


def cmd_sample(cfg: CliConfig) -> tuple[dict, int]:
    g = _group(cfg, "unitary")
    if g.kind == SIGNED:
        raise UsageError("sample supports unitary and orthogonal")
    sample = sample_haar(g.kind, g.d, cfg.seed)
    rows = [[[float(z.real), float(z.imag)] for z in row] for row in sample.entries]
    return {
        "group": g.kind,
        "d": g.d,
        "seed": cfg.seed,
        "provenance": sample.provenance,
        "entries": rows,
        "unitarity_error": sample.unitarity_error(),
    }, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freeconv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="write JSON here instead of standard output")

    conv = sub.add_parser("conv", help="finite free convolution of two polynomials")
    conv.add_argument("action", choices=sorted(CONV_OPERATORS))
    conv.add_argument("--p", required=True, help='inline JSON or "roots:1,2,3"')
    conv.add_argument("--q", required=True)
    common(conv)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("action", choices=["quadrature", "convolution"])
    verify.add_argument("--group", help="unitary | orthogonal | signed:<s> | signed:inf")
    verify.add_argument("--d", type=int, required=True)
    verify.add_argument("--kmax", type=int)
    verify.add_argument("--kind", choices=["add", "mult", "rect", "rectadd"], default="add")
    verify.add_argument("--method", choices=METHODS, default="exact-signed")
    verify.add_argument("--n", type=int, default=20000, help="Monte Carlo sample size")
    verify.add_argument("--cases", type=int, default=5, help="random spectrum pairs")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on group-element evaluations")
    common(verify)

    table = sub.add_parser("table", help="dump a Weingarten, character or zonal table")
    table.add_argument("action", choices=TABLE_KINDS)
    table.add_argument("--k", type=int, required=True)
    table.add_argument("--d", type=int)
    common(table)

    sample = sub.add_parser("sample", help="draw one Haar matrix")
    sample.add_argument("--group", default="unitary")
    sample.add_argument("--d", type=int, required=True)
    sample.add_argument("--seed", type=int, default=0)
    common(sample)
    return parser


def config_from_args(ns: argparse.Namespace) -> CliConfig:
    fields = {k: v for k, v in vars(ns).items() if k in CliConfig.__dataclass_fields__ and v is not None}
    return CliConfig(**fields)


COMMANDS = {"conv": cmd_conv, "verify": cmd_verify, "table": cmd_table, "sample": cmd_sample}


def dumps(obj: Any, sort_keys: bool = False) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=sort_keys, ensure_ascii=False)


def run(cfg: CliConfig) -> tuple[str, int]:
    cfg.validate()
    obj, code = COMMANDS[cfg.command](cfg)
    return dumps(obj, sort_keys=cfg.command == "table"), code


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        text, code = run(config_from_args(ns))
    except DegreeMismatchError as exc:
        print(f"freeconv: {exc}", file=sys.stderr)
        return EXIT_DEGREE
    except ResourceLimitError as exc:
        print(f"freeconv: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, KeyError, TypeError) as exc:
        print(f"freeconv: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
