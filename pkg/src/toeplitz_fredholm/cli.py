"""Command-line driver: ``verify``, ``szego``, ``kernel`` and ``exact`` subcommands."""
from __future__ import annotations

import argparse
import itertools
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import formal
from .identity import METHODS, make_kernel, szego_scan, verify
from .special import formula_readings
from .symbol import SymbolSpec, preset, symbol_from_json, szego_constant

REPORT_SCHEMA = 1
MAX_DEGREE = 12


@dataclass
class RunConfig:
    symbol: SymbolSpec
    n: list
    methods: tuple = ("series",)
    rel_tol: float = 1e-10
    output: str = "tsv"
    degree: int | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("--rel-tol must be positive")
        if self.degree is not None and not 0 <= self.degree <= MAX_DEGREE:
            raise ValueError(f"--degree must lie in [0, {MAX_DEGREE}]")


def parse_range(text: str) -> list:
    """``"a..b"`` (inclusive) or a single integer."""
    if ".." in text:
        a, b = text.split("..", 1)
        a, b = int(a), int(b)
        if b < a:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        return list(range(a, b + 1))
    return [int(text)]


def fmt(x) -> str:
    return f"{x:.17g}"


def _cnum(x):
    x = complex(x)
    return [x.real, x.imag]


def _load_symbol(args) -> SymbolSpec:
    if args.symbol:
        with open(args.symbol) as fh:
            return symbol_from_json(json.load(fh))
    if args.preset:
        names = {"bessel": ("theta",), "charlier": ("kappa", "theta"),
                 "hypergeometric": ("z", "zprime", "xi")}[args.preset]
        params = {}
        for name in names:
            val = getattr(args, name)
            if val is None:
                raise SystemExit(f"--preset {args.preset} needs --{name}")
            params[name] = complex(val.replace("i", "j")) if "i" in val or "j" in val else float(val)
        return preset(args.preset, **params)
    return SymbolSpec()


def _methods(choice: str, s: SymbolSpec) -> tuple:
    if choice == "all":
        return METHODS if s.preset is not None else METHODS[:2]
    return (choice,)


def _emit(out, payload: dict, header: list, rows: list, fmt_kind: str):
    if fmt_kind == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=1) + "\n")
        return
    out.write("\t".join(header) + "\n")
    for row in rows:
        out.write("\t".join(row) + "\n")


def cmd_verify(cfg: RunConfig, out=sys.stdout) -> int:
    rows = verify(cfg.symbol, cfg.n, cfg.methods, cfg.rel_tol)
    ok = all(r.rel_err <= cfg.rel_tol and r.fredholm.converged for r in rows)
    table, records = [], []
    for r in rows:
        table.append([str(r.n), r.method, fmt(r.lhs.real), fmt(r.lhs.imag), fmt(r.Z.real),
                      fmt(r.Z.imag), fmt(r.fredholm.value.real), fmt(r.fredholm.value.imag),
                      fmt(r.rel_err), str(r.fredholm.M), fmt(r.fredholm.tail_bound),
                      "yes" if r.fredholm.converged else "no"])
        records.append({"n": r.n, "method": r.method, "lhs": _cnum(r.lhs), "Z": _cnum(r.Z),
                        "fredholm": _cnum(r.fredholm.value), "rhs": _cnum(r.rhs),
                        "rel_err": r.rel_err, "M": r.fredholm.M,
                        "tail_bound": r.fredholm.tail_bound,
                        "converged": r.fredholm.converged})
    header = ["n", "method", "lhs_re", "lhs_im", "Z_re", "Z_im", "fredholm_re",
              "fredholm_im", "rel_err", "M", "tail_bound", "converged"]
    payload = {"schema": REPORT_SCHEMA, "command": "verify", "rel_tol": cfg.rel_tol,
               "status": "PASS" if ok else "FAIL", "rows": records}
    _emit(out, payload, header, table, cfg.output)
    return 0 if ok else 1


def cmd_szego(cfg: RunConfig, out=sys.stdout) -> int:
    Z = szego_constant(cfg.symbol)
    rows = szego_scan(cfg.symbol, cfg.n)
    table = [[str(r.n), fmt(r.D.real), fmt(r.D.imag), fmt(r.gap), fmt(r.ratio)] for r in rows]
    payload = {"schema": REPORT_SCHEMA, "command": "szego", "Z": _cnum(Z),
               "rows": [{"n": r.n, "D": _cnum(r.D), "gap": r.gap,
                         "ratio": None if math.isnan(r.ratio) else r.ratio} for r in rows]}
    _emit(out, payload, ["n", "D_re", "D_im", "gap", "ratio"], table, cfg.output)
    return 0


def cmd_kernel(cfg: RunConfig, i_range, j_range, out=sys.stdout) -> int:
    s = cfg.symbol
    rows_idx, cols_idx = np.array(i_range), np.array(j_range)
    blocks = {m: make_kernel(s, m).block_fn(rows_idx, cols_idx) for m in cfg.methods}
    deviations = {f"{a}|{b}": float(np.abs(blocks[a] - blocks[b]).max())
                  for a, b in itertools.combinations(cfg.methods, 2)}
    ok = all(v <= cfg.rel_tol for v in deviations.values())
    table, records = [], []
    for a, i in enumerate(i_range):
        for b, j in enumerate(j_range):
            vals = [blocks[m][a, b] for m in cfg.methods]
            table.append([str(i), str(j)] + [fmt(x) for v in vals for x in (v.real, v.imag)])
            records.append({"i": i, "j": j, "values": {m: _cnum(blocks[m][a, b])
                                                       for m in cfg.methods}})
    header = ["i", "j"] + [f"{m}_{p}" for m in cfg.methods for p in ("re", "im")]
    payload = {"schema": REPORT_SCHEMA, "command": "kernel", "methods": list(cfg.methods),
               "max_deviation": deviations, "status": "PASS" if ok else "FAIL",
               "entries": records}
    if s.preset is not None:
        payload["readings"] = formula_readings(s, min(8, max(len(i_range), len(j_range), 2)))
    _emit(out, payload, header, table, cfg.output)
    if cfg.output == "tsv":
        for pair, v in deviations.items():
            out.write(f"# max_deviation\t{pair}\t{fmt(v)}\n")
        if "readings" in payload:
            rd = payload["readings"]
            for reading, v in rd["deviation"].items():
                out.write(f"# reading\t{reading}\t{fmt(v)}\n")
            out.write(f"# reading_selected\t{rd['selected']}\n")
    return 0 if ok else 1


def cmd_exact(cfg: RunConfig, checks, out=sys.stdout) -> int:
    d = cfg.degree
    reports = []
    for n in cfg.n:
        if "verify" in checks:
            reports.append(formal.exact_verify(n, d))
        if "gessel" in checks:
            reports.append(formal.gessel_check(n, d))
        if "szego" in checks and 2 * n + 2 > d:
            reports.append(formal.szego_check(n, d))
        if "locality" in checks and n >= 1:
            reports.extend(formal.locality_check(n, d))
    if "correlation" in checks:
        for X in cfg.extra.get("X", []):
            reports.append(formal.correlation_check(X, d))
    ok = all(r.passed for r in reports)
    if cfg.output == "json":
        out.write(json.dumps({"schema": REPORT_SCHEMA, "command": "exact",
                              "status": "PASS" if ok else "FAIL",
                              "reports": [r.to_json() for r in reports]},
                             sort_keys=True, indent=1) + "\n")
    else:
        out.write("check\tparams\tstatus\tdifference_terms\n")
        for r in reports:
            params = ",".join(f"{k}={v}" for k, v in sorted(r.params.items()))
            out.write(f"{r.check}\t{params}\t{r.status}\t{len(r.difference.terms)}\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--symbol", help="JSON file with a symbol specification")
    src.add_argument("--preset", choices=["bessel", "charlier", "hypergeometric"])
    for name in ("theta", "kappa", "z", "zprime", "xi"):
        common.add_argument(f"--{name}", help=f"preset parameter {name} (complex allowed, e.g. 1+1j)")
    common.add_argument("--n", default="1..10", help="range a..b (inclusive)")
    common.add_argument("--method", default="series", choices=list(METHODS) + ["all"])
    common.add_argument("--rel-tol", type=float, default=1e-10)
    common.add_argument("--degree", type=int, default=None)
    common.add_argument("--out", default="tsv", choices=["tsv", "json"])
    common.add_argument("--seed", type=int, default=None, help="reserved")

    parser = argparse.ArgumentParser(prog="toeplitz-fredholm",
                                     description="Toeplitz determinants as Fredholm determinants.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="compare D_n with Z det(1-K)")
    sub.add_parser("szego", parents=[common], help="scan |D_n - Z| over n")
    k = sub.add_parser("kernel", parents=[common], help="tabulate K(i, j) by each method")
    k.add_argument("--i", default="0..5")
    k.add_argument("--j", default="0..5")
    e = sub.add_parser("exact", parents=[common], help="exact identities at truncation degree d")
    e.add_argument("--checks", default="verify,gessel,szego",
                   help="comma list of verify,gessel,szego,locality,correlation")
    e.add_argument("--X", action="append", default=[],
                   help="comma list of points for the correlation check (repeatable)")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        s = _load_symbol(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    extra = {}
    if args.command == "exact":
        extra["X"] = [tuple(int(x) for x in item.split(",") if x.strip()) for item in args.X]
        if args.degree is None:
            args.degree = 6
    try:
        cfg = RunConfig(s, parse_range(args.n), _methods(args.method, s), args.rel_tol,
                        args.out, args.degree, extra)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "verify":
        return cmd_verify(cfg, out)
    if args.command == "szego":
        return cmd_szego(cfg, out)
    if args.command == "kernel":
        return cmd_kernel(cfg, parse_range(args.i), parse_range(args.j), out)
    return cmd_exact(cfg, [c.strip() for c in args.checks.split(",")], out)


if __name__ == "__main__":
    sys.exit(main())
