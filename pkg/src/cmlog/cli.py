"""Command-line front end.

    cmlog eval --re 2 --im 0
    cmlog rho-table --t-min 0.01 --t-max 5 --points 500
    cmlog phi-table --s-min 0 --s-max 20 --points 400
    cmlog moments --x 1 --k-max 5
    cmlog verify --suite all --seed 0 --format json --output report.json

Exit codes: 0 ok / all checks passed, 1 a check failed, 2 usage or domain
error, 3 quadrature did not converge, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .cutplane import eval_g_boundary, eval_g_direct, eval_g_prime_direct
from .density import rho
from .errors import DomainError
from .quad import QuadratureError
from .transforms import MAX_MOMENT_ORDER, g_moment, phi, stieltjes_g
from . import verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC, EXIT_IO = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    tol: float = 1e-10
    output: str | None = None
    format: str = "csv"
    seed: int = 0

    def __post_init__(self):
        if not 1e-14 <= self.tol <= 1e-2:
            raise UsageError("--tol must lie in [1e-14, 1e-2]")


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _short(v) -> str:
    if isinstance(v, complex):
        return f"{v.real:.6g}{v.imag:+.6g}j"
    return f"{v:.6g}"


def _write(text: str, output: str | None):
    if output in (None, "-"):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        Path(output).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise IOError(str(exc)) from exc


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _check_range(lo, hi, points, name):
    if not lo < hi:
        raise UsageError(f"{name}: need min < max")
    if points < 2:
        raise UsageError(f"{name}: need at least 2 points")


def cmd_eval(args, cfg: CliConfig) -> int:
    z = complex(args.re, args.im)
    if args.boundary:
        if args.im != 0 or not args.re < 0:
            raise UsageError("--boundary needs --im 0 and --re < 0")
        bv = eval_g_boundary(args.re, "lower" if args.lower else "upper")
        rec = {"t": bv.t, "side": bv.side, "G_boundary_re": bv.value.real,
               "G_boundary_im": bv.value.imag}
    else:
        g = complex(eval_g_direct(z))
        gr = stieltjes_g(z, cfg.tol)
        gp = complex(eval_g_prime_direct(z))
        rec = {"z_re": z.real, "z_im": z.imag, "G_direct_re": g.real, "G_direct_im": g.imag,
               "G_representation_re": gr.real, "G_representation_im": gr.imag,
               "abs_difference": abs(g - gr), "G_prime_re": gp.real, "G_prime_im": gp.imag}
    if cfg.format == "json":
        _write(json.dumps(rec, indent=2) + "\n", cfg.output)
    else:
        lines = [f"{k}: {_short(v) if isinstance(v, float) else v}" for k, v in rec.items()]
        _write("\n".join(lines) + "\n", cfg.output)
    return EXIT_OK


def cmd_rho_table(args, cfg: CliConfig) -> int:
    if not args.t_min > 0:
        raise UsageError("rho-table: need t_min > 0")
    _check_range(args.t_min, args.t_max, args.points, "rho-table")
    t = np.linspace(args.t_min, args.t_max, args.points)
    vals = rho(t)
    _write(_csv(["t", "rho"], ((float(a), float(b)) for a, b in zip(t, vals))), cfg.output)
    return EXIT_OK


def cmd_phi_table(args, cfg: CliConfig) -> int:
    if not args.s_min >= 0:
        raise UsageError("phi-table: need s_min >= 0")
    _check_range(args.s_min, args.s_max, args.points, "phi-table")
    s = np.linspace(args.s_min, args.s_max, args.points)
    rows = [(float(v), phi(float(v), cfg.tol)) for v in s]
    _write(_csv(["s", "phi"], rows), cfg.output)
    return EXIT_OK


def cmd_moments(args, cfg: CliConfig) -> int:
    if not args.x > 0:
        raise UsageError("moments: need x > 0")
    if not 1 <= args.k_max <= MAX_MOMENT_ORDER:
        raise UsageError(f"moments: need 1 <= k_max <= {MAX_MOMENT_ORDER}")
    rows = []
    for k in range(1, args.k_max + 1):
        m = g_moment(args.x, k)
        d = (-1) ** (k + 1) * math.factorial(k) * m
        # sign pattern (-1)^(k-1) G^(k) > 0
        rows.append((k, m, float(d), "true" if (-1) ** (k - 1) * d > 0 else "false"))
    _write(_csv(["k", "moment", "derivative", "sign_ok"], rows), cfg.output)
    return EXIT_OK


def cmd_verify(args, cfg: CliConfig) -> int:
    if args.suite == "all":
        names = None
    else:
        names = [n.strip() for n in args.suite.split(",")]
        unknown = [n for n in names if n not in verify.CHECKS]
        if unknown:
            raise UsageError(f"unknown check(s): {', '.join(unknown)}; "
                             f"choose from: all, {', '.join(verify.CHECKS)}")
    report = verify.run_all(cfg.seed, mutate=args.mutate, only=names)
    _write(report.to_json() + "\n", cfg.output)
    for r in report.results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cmlog", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-10, help="absolute quadrature tolerance")
    common.add_argument("--output", "-o", default=None, help="output file (default stdout)")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate G at a point")
    e.add_argument("--re", type=float, required=True)
    e.add_argument("--im", type=float, default=0.0)
    e.add_argument("--boundary", action="store_true",
                   help="boundary value G(t + i0) on the cut, t = --re < 0")
    e.add_argument("--lower", action="store_true", help="with --boundary: G(t - i0)")
    e.add_argument("--format", choices=("text", "json"), default="text")

    r = sub.add_parser("rho-table", parents=[common], help="CSV table of rho")
    r.add_argument("--t-min", type=float, default=0.01)
    r.add_argument("--t-max", type=float, default=5.0)
    r.add_argument("--points", type=int, default=500)

    f = sub.add_parser("phi-table", parents=[common], help="CSV table of phi")
    f.add_argument("--s-min", type=float, default=0.0)
    f.add_argument("--s-max", type=float, default=20.0)
    f.add_argument("--points", type=int, default=400)

    m = sub.add_parser("moments", parents=[common], help="CSV of moments and derivatives")
    m.add_argument("--x", type=float, required=True)
    m.add_argument("--k-max", type=int, default=10)

    v = sub.add_parser("verify", parents=[common], help="run the verification suite")
    v.add_argument("--suite", default="all", help="'all' or comma-separated check names")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("json",), default="json")
    v.add_argument("--mutate", action="store_true",
                   help="use the sign-flipped density (harness self-test)")
    return p


COMMANDS = {"eval": cmd_eval, "rho-table": cmd_rho_table, "phi-table": cmd_phi_table,
            "moments": cmd_moments, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = CliConfig(args.command, args.tol, args.output,
                        getattr(args, "format", "csv"), getattr(args, "seed", 0))
        return COMMANDS[args.command](args, cfg)
    except (UsageError, DomainError) as exc:
        print(f"cmlog: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuadratureError as exc:
        print(f"cmlog: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except IOError as exc:
        print(f"cmlog: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
