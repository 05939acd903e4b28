"""Command-line front end: eval | zeros | audit | oscillation.

Exit status is 0 whenever the command ran to completion, whatever the
mathematical verdicts were, and 2 for invalid input or configuration.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Sequence

from .errors import (
    DomainError,
    OverflowGuardError,
    PreconditionError,
    ToleranceUnreachableError,
)
from .integral import StripPoint, zeta_integral
from .kernels import Component
from .numerics import reference_zeta
from .proof_audit import AuditConfig, audit_report, run_full_audit, sample_oscillation
from .zeros import T_CAP, find_zeros

EXIT_OK = 0
EXIT_INVALID = 2

_EVAL_TOL = 1e-10
_FORMATS = ("json", "csv", "text")
_DEFAULT_FORMAT = {"eval": "text", "zeros": "csv", "audit": "json", "oscillation": "csv"}


class CliError(Exception):
    """Invalid input; reported on stderr with exit status 2."""


def fmt(x: float) -> str:
    """17 significant digits: enough to round-trip any binary64."""
    return format(float(x), ".17g")


def parse_complex(text: str) -> complex:
    """Parse ``a+bi`` / ``a-bi`` / ``a`` / ``bi`` (``j`` also accepted)."""
    cleaned = text.strip().replace(" ", "").replace("I", "i").replace("J", "j")
    if not cleaned:
        raise CliError(f"cannot parse complex number {text!r}")
    cleaned = cleaned[:-1] + "j" if cleaned.endswith("i") else cleaned
    if cleaned.endswith("+j") or cleaned.endswith("-j") or cleaned == "j":
        cleaned = cleaned[:-1] + "1j"
    try:
        z = complex(cleaned)
    except ValueError:
        raise CliError(f"cannot parse complex number {text!r}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise CliError(f"non-finite complex number {text!r}")
    return z


def _parse_grid(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.replace(";", ",").split(",") if v.strip())
    except ValueError:
        raise CliError(f"cannot parse N grid {text!r}") from None


def read_config_file(path: Path) -> dict[str, str]:
    """``key = value`` lines; blank lines and ``#`` comments ignored."""
    out: dict[str, str] = {}
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise CliError(f"cannot read config file {path}: {exc}") from None
    for number, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliError(f"{path}:{number}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


_CONFIG_KEYS = {"tol": "tolerance", "tolerance": "tolerance", "n_grid": "n_grid",
                "max_n": "max_n", "k_max": "k_max", "seed": "seed", "format": "format",
                "output_format": "format"}


def resolve_settings(args: argparse.Namespace) -> dict[str, Any]:
    """Merge defaults < config file < flags into one settings dict."""
    settings: dict[str, Any] = {"tolerance": None, "n_grid": (10.0, 100.5, 1000.0),
                                "max_n": None, "k_max": 40, "seed": 42, "format": None}
    if args.config is not None:
        for key, value in read_config_file(args.config).items():
            if key not in _CONFIG_KEYS:
                raise CliError(f"unknown config key {key!r}")
            settings[_CONFIG_KEYS[key]] = value
    for key in ("tolerance", "n_grid", "max_n", "k_max", "seed", "format"):
        flag = getattr(args, key, None)
        if flag is not None:
            settings[key] = flag
    try:
        if settings["tolerance"] is not None:
            settings["tolerance"] = float(settings["tolerance"])
        if isinstance(settings["n_grid"], str):
            settings["n_grid"] = _parse_grid(settings["n_grid"])
        if settings["max_n"] is not None:
            settings["max_n"] = float(settings["max_n"])
        settings["k_max"] = int(settings["k_max"])
        settings["seed"] = int(settings["seed"])
    except ValueError as exc:
        raise CliError(f"invalid setting: {exc}") from None
    tol = settings["tolerance"]
    if tol is not None and not (math.isfinite(tol) and tol > 0):
        raise CliError("tolerance must be a positive number")
    if settings["max_n"] is not None:
        settings["n_grid"] = tuple(n for n in settings["n_grid"] if n <= settings["max_n"])
        if not settings["n_grid"]:
            raise CliError("--max-n removes every value from the N grid")
    if any(not n > 1 for n in settings["n_grid"]):
        raise CliError("N grid values must exceed 1")
    if settings["k_max"] < 8:
        raise CliError("k_max must be at least 8")
    fmt_name = settings["format"] or _DEFAULT_FORMAT[args.command]
    if fmt_name not in _FORMATS:
        raise CliError(f"unknown format {fmt_name!r}; choose from {', '.join(_FORMATS)}")
    settings["format"] = fmt_name
    return settings


def _csv_text(rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([fmt(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _json_text(payload: Any) -> str:
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def _cplx(z: complex) -> dict[str, float]:
    return {"re": z.real, "im": z.imag}


def _cplx_text(z: complex) -> str:
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{fmt(z.real)}{sign}{fmt(abs(z.imag))}i"


def cmd_eval(args, settings) -> str:
    s = parse_complex(args.s)
    if s == 1:
        raise CliError("pole at s = 1")
    if not s.real > 0:
        raise CliError("eval requires Re(s) > 0")
    tol = max(_EVAL_TOL, settings["tolerance"] or _EVAL_TOL)
    result = zeta_integral(s, tol)
    ref = reference_zeta(s)
    delta = abs(result.value - ref)
    kind = settings["format"]
    if kind == "json":
        return _json_text({"schema": 1, "s": _cplx(s), "value": _cplx(result.value),
                           "abs_value": abs(result.value), "tail_bound": result.tail_bound,
                           "intervals_used": result.intervals_used,
                           "reference": _cplx(ref), "reference_delta": delta})
    if kind == "csv":
        return _csv_text([["s_re", "s_im", "re", "im", "abs", "tail_bound", "reference_delta"],
                          [s.real, s.imag, result.value.real, result.value.imag,
                           abs(result.value), result.tail_bound, delta]])
    return (f"s = {_cplx_text(s)}\n"
            f"zeta(s) = {_cplx_text(result.value)}\n"
            f"|zeta(s)| = {fmt(abs(result.value))}\n"
            f"error bound = {fmt(result.tail_bound)}\n"
            f"intervals used = {result.intervals_used}\n"
            f"reference delta = {fmt(delta)}\n")


def cmd_zeros(args, settings) -> str:
    if args.t_max > T_CAP or args.t_min > T_CAP:
        raise CliError(f"range cap {T_CAP:g}")
    if args.t_min < 0 or args.t_max < args.t_min:
        raise CliError("need 0 <= t_min <= t_max")
    zeros = find_zeros(args.t_min, args.t_max, args.step)
    kind = settings["format"]
    if kind == "json":
        return _json_text({"schema": 1, "t_min": args.t_min, "t_max": args.t_max,
                           "zeros": [{"index": i, "b": z.b, "residual": z.residual,
                                      "width": z.width, "b_reference": z.b_reference}
                                     for i, z in enumerate(zeros, start=1)]})
    rows = [["index", "b", "residual", "width"]]
    rows += [[i, z.b, z.residual, z.width] for i, z in enumerate(zeros, start=1)]
    if kind == "csv":
        return _csv_text(rows)
    lines = [f"{'index':>5}  {'b':>22}  {'residual':>24}  {'width':>24}"]
    lines += [f"{i:>5}  {fmt(z.b):>22}  {fmt(z.residual):>24}  {fmt(z.width):>24}"
              for i, z in enumerate(zeros, start=1)]
    return "\n".join(lines) + "\n"


def _parse_point(text: str) -> StripPoint:
    parts = text.split(",")
    if len(parts) != 2:
        raise CliError(f"--point expects a,b; got {text!r}")
    try:
        a, b = (float(v) for v in parts)
    except ValueError:
        raise CliError(f"--point expects two numbers; got {text!r}") from None
    point = StripPoint(a, b) if math.isfinite(a) and math.isfinite(b) else None
    if point is None or not point.in_strip:
        raise CliError(f"point ({text}) must satisfy 0 < a < 1 and b > 0")
    return point


def cmd_audit(args, settings) -> str:
    if args.zero is not None:
        if args.zero < 1:
            raise CliError("--zero is a 1-based index")
        zeros = find_zeros(0.0, T_CAP, 0.1, limit=args.zero)
        if len(zeros) < args.zero:
            raise CliError(f"only {len(zeros)} zeros below the range cap {T_CAP:g}")
        point = StripPoint(0.5, zeros[args.zero - 1].b)
        source = {"zero_index": args.zero}
    else:
        point = _parse_point(args.point)
        source = {"zero_index": None}
    config = AuditConfig(tolerance=settings["tolerance"] or 1e-6,
                         n_grid=tuple(settings["n_grid"]), k_max=settings["k_max"],
                         seed=settings["seed"])
    verdicts = run_full_audit(point, config)
    report = audit_report(point, verdicts, config, source)
    kind = settings["format"]
    if kind == "json":
        return _json_text(report)
    if kind == "csv":
        rows = [["step", "status", "residual"]]
        rows += [[v["step"], v["status"], "" if v["residual"] is None else float(v["residual"])]
                 for v in report["steps"]]
        return _csv_text(rows)
    lines = [f"audit at a = {fmt(point.a)}, b = {fmt(point.b)}"]
    for v in report["steps"]:
        res = "-" if v["residual"] is None else fmt(v["residual"])
        lines.append(f"{v['step']:>4}  {v['status']:<18}  {res:>24}  {', '.join(v['equation_refs'])}")
    return "\n".join(lines) + "\n"


def cmd_oscillation(args, settings) -> str:
    try:
        component = Component(args.component.upper())
    except ValueError:
        raise CliError(f"component must be one of R1, R2, I1, I2; got {args.component!r}") from None
    point = StripPoint(args.a, args.b)
    if not point.in_strip:
        raise CliError("oscillation needs 0 < a < 1 and b > 0")
    series = sample_oscillation(component, point, settings["k_max"])
    if series.truncated:
        print(f"overflow guard: N cap reached after {len(series.samples)} of "
              f"{settings['k_max']} samples", file=sys.stderr)
    kind = settings["format"]
    if kind == "json":
        out = series.to_dict()
        out["schema"] = 1
        return _json_text(out)
    rows: list[list[Any]] = [["N", "T", "envelope"]]
    for n, t in series.samples:
        rows.append([n, t, float(series.envelope(n))])
    if kind == "csv":
        rows.append(["exponent", series.envelope_exponent, series.exponent_stderr])
        return _csv_text(rows)
    lines = [f"{component.value} at a = {fmt(point.a)}, b = {fmt(point.b)}: "
             f"exponent {fmt(series.envelope_exponent)} +/- {fmt(series.exponent_stderr)}"]
    lines += [f"{fmt(n):>24}  {fmt(t):>24}  {fmt(e):>24}" for n, t, e in rows[1:]]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="key=value settings file")
    common.add_argument("--tol", dest="tolerance", type=float, help="tolerance")
    common.add_argument("--n-grid", dest="n_grid", type=_parse_grid,
                        help="comma-separated N values for the integration-by-parts audit")
    common.add_argument("--max-n", dest="max_n", type=float,
                        help="drop N grid values above this")
    common.add_argument("--k-max", dest="k_max", type=int, help="peak samples per series")
    common.add_argument("--seed", type=int, help="seed for the algebraic sampling")
    common.add_argument("--format", choices=_FORMATS, help="output format")
    common.add_argument("--out", type=Path, help="write output to this file")

    parser = argparse.ArgumentParser(prog="zeta-audit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate zeta(s)")
    p_eval.add_argument("s", help="complex argument, e.g. 0.5+14.134725i")

    p_zeros = sub.add_parser("zeros", parents=[common], help="critical-line zeros")
    p_zeros.add_argument("t_min", type=float)
    p_zeros.add_argument("t_max", type=float)
    p_zeros.add_argument("--step", type=float, default=0.1, help="scan step (<= 0.5)")

    p_audit = sub.add_parser("audit", parents=[common], help="run the full audit")
    where = p_audit.add_mutually_exclusive_group(required=True)
    where.add_argument("--zero", type=int, help="1-based index of a critical-line zero")
    where.add_argument("--point", help="explicit strip point a,b")

    p_osc = sub.add_parser("oscillation", parents=[common], help="boundary-term series")
    p_osc.add_argument("component", help="R1, R2, I1 or I2")
    p_osc.add_argument("a", type=float)
    p_osc.add_argument("b", type=float)
    return parser


_COMMANDS = {"eval": cmd_eval, "zeros": cmd_zeros, "audit": cmd_audit,
             "oscillation": cmd_oscillation}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = resolve_settings(args)
        text = _COMMANDS[args.command](args, settings)
    except (CliError, DomainError, PreconditionError, ToleranceUnreachableError,
            OverflowGuardError) as exc:
        print(f"zeta-audit {args.command}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
