"""Command-line front end.

Subcommands: ``moments`` (compute C(m) by one or more routes), ``tables``
(dump the exact t/H triangles), ``verify`` (run identity suites, emit a JSON
report), ``constants`` (print pi/log2/eta/zeta values).

Configuration precedence: flags > COTMOMENTS_DIGITS environment variable >
--config JSON file > built-in defaults (50 digits, N = 10^5, tol =
10^-(digits-10)).  Reports go to --out or stdout; progress and failures go
to stderr so stdout stays machine-clean.

Exit codes: 0 all good, 1 identity/route disagreement, 2 usage error.
"""

from __future__ import annotations

import argparse
import datetime
import json
import os
import re
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from mpmath import mp, mpf

from . import cfn
from .hpreal import GUARD_DIGITS, eta, log2, pi, to_digits, zeta
from .moments import (
    ROUTES,
    SUITES,
    MomentValue,
    _ROUTE_ALIASES,
    compute_moment,
    run_suite,
)
from .quadrature import QuadratureError, default_tolerance
from .report import VerificationReport

__all__ = ["RunConfig", "main"]

ENV_DIGITS = "COTMOMENTS_DIGITS"

_EXIT_OK = 0
_EXIT_FAIL = 1
_EXIT_USAGE = 2

_ETA_M_MAX = 40
_SERIES_M_MAX = 12
_TABLE_MAX = 200


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Effective run configuration after merging all sources."""

    digits: int = 50
    n: int = 100000
    tol: Optional[str] = None      # None -> 10^-(digits-10)
    format: Optional[str] = None   # per-command default
    out: Optional[str] = None

    def validate(self) -> None:
        if self.digits < 10:
            raise UsageError(f"--digits must be >= 10, got {self.digits}")
        if self.n < 10:
            raise UsageError(f"--n must be >= 10, got {self.n}")
        if self.tol is not None:
            try:
                positive = mpf(self.tol) > 0
            except Exception:
                positive = False
            if not positive:
                raise UsageError(f"--tol must be a positive number, got {self.tol!r}")

    def tolerance(self) -> mpf:
        if self.tol is None:
            return default_tolerance(self.digits)
        return mpf(self.tol)


def _load_config_file(path: str) -> Dict[str, object]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"config file {path} must hold a JSON object")
    return data


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        data = _load_config_file(args.config)
        for key in ("digits", "n"):
            if key in data:
                cfg.__setattr__(key, int(data[key]))
        for key in ("tol", "format", "out"):
            if key in data and data[key] is not None:
                cfg.__setattr__(key, str(data[key]))
    env_digits = os.environ.get(ENV_DIGITS)
    if env_digits:
        try:
            cfg.digits = int(env_digits)
        except ValueError:
            raise UsageError(f"{ENV_DIGITS} must be an integer, got {env_digits!r}")
    if getattr(args, "digits", None) is not None:
        cfg.digits = args.digits
    if getattr(args, "n", None) is not None:
        cfg.n = args.n
    if getattr(args, "tol", None) is not None:
        cfg.tol = args.tol
    if getattr(args, "format", None) is not None:
        cfg.format = args.format
    if getattr(args, "out", None) is not None:
        cfg.out = args.out
    cfg.validate()
    return cfg


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------------------
# moments
# ---------------------------------------------------------------------------

_RANGE_RE = re.compile(r"^(\d+)\.\.(\d+)$")


def _parse_m_spec(spec: str) -> List[int]:
    """'3' | '1..4' | '1,2,5' -> list of m values."""
    values: List[int] = []
    for piece in spec.split(","):
        piece = piece.strip()
        match = _RANGE_RE.match(piece)
        if match:
            lo, hi = int(match.group(1)), int(match.group(2))
            if lo > hi:
                raise UsageError(f"empty range {piece!r} in --m")
            values.extend(range(lo, hi + 1))
        elif piece.isdigit():
            values.append(int(piece))
        else:
            raise UsageError(f"cannot parse --m piece {piece!r} (use e.g. 3, 1..4, 1,2,5)")
    if not values:
        raise UsageError("--m selected no moments")
    return values


def _parse_routes(spec: str) -> List[str]:
    routes: List[str] = []
    for piece in spec.split(","):
        canonical = _ROUTE_ALIASES.get(piece.strip())
        if canonical is None:
            raise UsageError(f"unknown route {piece.strip()!r}; pick from {ROUTES}")
        if canonical not in routes:
            routes.append(canonical)
    return routes


def _route_bound(mv: MomentValue, P: int) -> mpf:
    if mv.error_bound is not None:
        return mv.error_bound
    return mpf(10) ** (-(P - 8))  # closed form: a few ulps, generously


def cmd_moments(args: argparse.Namespace, cfg: RunConfig) -> int:
    m_values = _parse_m_spec(args.m)
    routes = _parse_routes(args.route)
    P = cfg.digits
    for m in m_values:
        if m < 1 or m > _ETA_M_MAX:
            raise UsageError(f"--m values must satisfy 1 <= m <= {_ETA_M_MAX}, got {m}")
        if m > _SERIES_M_MAX and any(r in ("cfn-series", "nested-series") for r in routes):
            raise UsageError(
                f"series routes are limited to m <= {_SERIES_M_MAX} (got m={m});"
                " use the eta or quadrature route")
    rows: List[MomentValue] = []
    for m in m_values:
        for route in routes:
            rows.append(compute_moment(m, P, route, N=cfg.n, tol=cfg.tolerance()))

    disagreements: List[str] = []
    with mp.workdps(P + GUARD_DIGITS):
        by_m: Dict[int, List[MomentValue]] = {}
        for mv in rows:
            by_m.setdefault(mv.m, []).append(mv)
        for m, group in by_m.items():
            for i in range(len(group)):
                for j in range(i + 1, len(group)):
                    a, b = group[i], group[j]
                    gap = abs(a.value - b.value)
                    allowed = _route_bound(a, P) + _route_bound(b, P)
                    if gap > allowed:
                        disagreements.append(
                            f"C({m}): {a.route} vs {b.route} differ by "
                            f"{mp.nstr(gap, 5)} > combined bound {mp.nstr(allowed, 5)}")

    fmt = cfg.format or "text"
    if fmt == "json":
        payload = {
            "command": "moments",
            "config": {"digits": P, "n": cfg.n, "tol": mp.nstr(cfg.tolerance(), 5)},
            "rows": [
                {
                    "m": mv.m,
                    "route": mv.route,
                    "value": to_digits(mv.value, P),
                    "truncation": mv.truncation,
                    "error_bound": None if mv.error_bound is None
                    else mp.nstr(mv.error_bound, 8),
                }
                for mv in rows
            ],
            "disagreements": disagreements,
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), cfg.out)
    elif fmt == "csv":
        lines = ["m,route,value,truncation,error_bound"]
        for mv in rows:
            bound = "" if mv.error_bound is None else mp.nstr(mv.error_bound, 8)
            trunc = "" if mv.truncation is None else str(mv.truncation)
            lines.append(f"{mv.m},{mv.route},{to_digits(mv.value, P)},{trunc},{bound}")
        _emit("\n".join(lines), cfg.out)
    else:
        lines = []
        for mv in rows:
            extras = []
            if mv.truncation is not None:
                extras.append(f"N={mv.truncation}")
            if mv.error_bound is not None:
                extras.append(f"bound={mp.nstr(mv.error_bound, 8)}")
            suffix = f"  ({', '.join(extras)})" if extras else ""
            lines.append(f"C({mv.m})  {mv.route:<16} {to_digits(mv.value, P)}{suffix}")
        _emit("\n".join(lines), cfg.out)

    if disagreements:
        for line in disagreements:
            print(f"[moments] DISAGREEMENT {line}", file=sys.stderr)
        return _EXIT_FAIL
    return _EXIT_OK


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

_BUILDERS = {
    "t0": cfn.build_t0,
    "t1": cfn.build_t1,
    "h0": cfn.build_h0,
    "h1": cfn.build_h1,
}


def cmd_tables(args: argparse.Namespace, cfg: RunConfig) -> int:
    which = args.which
    kmax, nmax = args.kmax, args.nmax
    if not 0 <= kmax <= nmax <= _TABLE_MAX:
        raise UsageError(
            f"need 0 <= kmax <= nmax <= {_TABLE_MAX}, got kmax={kmax}, nmax={nmax}")
    table = _BUILDERS[which](kmax, nmax)
    fmt = cfg.format or "csv"
    if fmt == "json":
        _emit(cfn.table_to_json(table), cfg.out)
    elif fmt == "csv":
        _emit(cfn.table_to_csv(table), cfg.out)
    else:
        lines = [f"{which}(k, n) for 0 <= k <= {kmax}, 0 <= n <= {nmax}"]
        for k in range(kmax + 1):
            entries = ", ".join(str(v) for v in table.row(k))
            lines.append(f"k={k}: {entries}")
        _emit("\n".join(lines), cfg.out)
    return _EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    suite = args.suite
    P, N = cfg.digits, cfg.n
    tol = cfg.tolerance()
    if suite == "all":
        report = VerificationReport("all", config={"digits": P, "N": N})
        for sub in ("tables", "closed-forms", "consequences", "gf", "routes",
                    "h-reduction"):
            print(f"[verify] running {sub} ...", file=sys.stderr)
            part = run_suite(sub, P, N, tol)
            print(f"[verify]   {sub}: {part.pass_count} passed,"
                  f" {part.fail_count} failed", file=sys.stderr)
            report.extend(part, prefix=sub)
    else:
        print(f"[verify] running {suite} ...", file=sys.stderr)
        report = run_suite(suite, P, N, tol)
    meta = {"generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat()}
    _emit(report.to_json(meta=meta), cfg.out)
    print(f"[verify] {report.suite}: {report.pass_count} passed,"
          f" {report.fail_count} failed", file=sys.stderr)
    if not report.all_passed:
        for rec in report.failing():
            print(f"[verify] FAIL {rec.id}: |{rec.lhs} - {rec.rhs}|"
                  f" = {rec.diff} > {rec.tol}", file=sys.stderr)
        return _EXIT_FAIL
    return _EXIT_OK


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

_CONST_RE = re.compile(r"^(eta|zeta)([0-9]+)$")


def _constant_value(name: str, P: int) -> mpf:
    if name == "pi":
        return pi(P)
    if name == "log2":
        return log2(P)
    match = _CONST_RE.match(name)
    if match:
        s = int(match.group(2))
        if match.group(1) == "eta":
            if s < 1:
                raise UsageError("eta requires s >= 1")
            return eta(s, P)
        if s < 2:
            raise UsageError("zeta requires s >= 2")
        return zeta(s, P)
    raise UsageError(
        f"unknown constant {name!r}; use pi, log2, eta<s> or zeta<s>")


def cmd_constants(args: argparse.Namespace, cfg: RunConfig) -> int:
    lines = []
    for name in args.names:
        value = _constant_value(name, cfg.digits)
        lines.append(f"{name} {to_digits(value, cfg.digits)}")
    _emit("\n".join(lines), cfg.out)
    return _EXIT_OK


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", "-d", type=int, default=None,
                        help="working precision in decimal digits (default 50;"
                             f" env {ENV_DIGITS})")
    common.add_argument("--n", type=int, default=None,
                        help="series truncation cutoff (default 100000)")
    common.add_argument("--tol", type=str, default=None,
                        help="quadrature tolerance (default 10^-(digits-10))")
    common.add_argument("--format", choices=("json", "csv", "text"), default=None,
                        help="output format (moments/tables default text/csv;"
                             " verify always emits JSON)")
    common.add_argument("--out", type=str, default=None,
                        help="write output to this file instead of stdout")
    common.add_argument("--config", type=str, default=None,
                        help="JSON file with default settings"
                             " (keys: digits, n, tol, format, out)")

    parser = argparse.ArgumentParser(
        prog="cotmoments",
        description="Moments of the half-angle cotangent: multi-route"
                    " computation, exact tables, and identity verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_m = sub.add_parser("moments", parents=[common],
                         help="compute C(m) by one or more routes")
    p_m.add_argument("--m", required=True,
                     help="moment selection: 3, 1..4, or 1,2,5")
    p_m.add_argument("--route", default="eta",
                     help="comma-separated routes: eta, cfn, nested, quadrature")
    p_m.set_defaults(func=cmd_moments)

    p_t = sub.add_parser("tables", parents=[common],
                         help="dump an exact triangle as CSV/JSON/text")
    p_t.add_argument("--which", required=True, choices=tuple(_BUILDERS),
                     help="which triangle: t0, t1, h0, h1")
    p_t.add_argument("--kmax", type=int, default=5)
    p_t.add_argument("--nmax", type=int, default=5)
    p_t.set_defaults(func=cmd_tables)

    p_v = sub.add_parser("verify", parents=[common],
                         help="run a verification suite and emit a JSON report")
    p_v.add_argument("--suite", default="all", choices=SUITES)
    p_v.set_defaults(func=cmd_verify)

    p_c = sub.add_parser("constants", parents=[common],
                         help="print constants (pi, log2, eta<s>, zeta<s>)")
    p_c.add_argument("names", nargs="+",
                     help="constant names, e.g. pi log2 eta3 zeta5")
    p_c.set_defaults(func=cmd_constants)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve_config(args)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except QuadratureError as exc:
        print(f"error: quadrature did not converge: {exc}", file=sys.stderr)
        return _EXIT_FAIL
    except ValueError as exc:
        # domain preconditions surface as usage errors at the CLI boundary
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
