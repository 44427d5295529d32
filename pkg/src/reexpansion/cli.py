"""Command-line front end.

Subcommands: hilbert, reexpand, sufficiency, su2, bench.  Inputs and
sequence outputs use the JSON sequence format; reports are CSV with
fixed headers and 17-significant-digit floats.  Output files are
written atomically (write-then-rename) and contain no timestamps, so
identical invocations produce byte-identical artifacts.

Exit status: 0 on success, 2 on usage errors (bad flags, malformed
values, dimension mismatches against the loaded input), 1 on
computation errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import hilbert as _hilbert
from . import reexpand as _reexpand
from . import weyl as _weyl
from .sequences import (
    Coeff1D,
    CoeffND,
    ParityVector,
    WeightExponent,
    load_sequence,
    save_sequence,
)

__all__ = ["CliInvocation", "parse_args", "run", "emit_report", "main"]


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliInvocation:
    subcommand: str
    options: dict


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}, expected lo:hi") from exc


def _parse_box(text: str) -> list[tuple[int, int]]:
    return [_parse_range(part) for part in text.split(",")]


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad {flag} list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="reexpansion",
        description="Discrete Hilbert transforms, re-expansions, and SU(2) diagnostics",
    )
    sub = p.add_subparsers(dest="subcommand", required=True)

    h = sub.add_parser("hilbert", help="one-dimensional discrete Hilbert transforms")
    h.add_argument("--input", required=True)
    h.add_argument("--kind", required=True, choices=_hilbert.KINDS)
    h.add_argument("--range", required=True, help="inclusive output window lo:hi")
    h.add_argument("--algorithm", default="fast", choices=_hilbert.ALGORITHMS)
    h.add_argument("--output", required=True)

    r = sub.add_parser("reexpand", help="re-expansion coefficient maps")
    r.add_argument("--input", required=True)
    r.add_argument("--parity", required=True, help="source parity per axis, e.g. 10")
    r.add_argument("--weight", default=None, help="weight exponents, e.g. 1,0")
    r.add_argument("--box", required=True, help="output box lo:hi[,lo:hi...]")
    r.add_argument("--subtract-mean", action="store_true")
    r.add_argument("--boundary-tol", type=float, default=1e-9)
    r.add_argument("--algorithm", default="fast", choices=_hilbert.ALGORITHMS)
    r.add_argument("--output", required=True)

    s = sub.add_parser("sufficiency", help="summability report for a transform")
    s.add_argument("--input", required=True)
    s.add_argument("--kind", required=True, choices=_hilbert.KINDS)
    s.add_argument("--windows", required=True, help="increasing window sizes, e.g. 64,128,256")
    s.add_argument("--weight", default=None, help="apply k^q before transforming")
    s.add_argument("--algorithm", default="fast", choices=_hilbert.ALGORITHMS)
    s.add_argument("--output", required=True)

    u = sub.add_parser("su2", help="SU(2) central-function diagnostics")
    u.add_argument("--op", required=True, choices=["q1", "q2", "sufficiency", "table", "character"])
    u.add_argument("--input", required=True)
    u.add_argument("--lmax", default=None, help="largest highest weight (half-integers allowed)")
    u.add_argument("--l", dest="level", default=None, help="highest weight for --op character")
    u.add_argument("--mode", default="paper", choices=_weyl.MODES)
    u.add_argument("--convention", default="nonnegative", choices=_weyl.CONVENTIONS)
    u.add_argument("--output", default=None)

    b = sub.add_parser("bench", help="naive vs fast timings and cross-check")
    b.add_argument("--kind", required=True, choices=_hilbert.KINDS)
    b.add_argument("--sizes", required=True, help="input/output sizes, e.g. 1024,4096")
    b.add_argument("--seed", type=int, default=7)
    b.add_argument("--output", required=True)

    return p


def parse_args(argv: list[str]) -> CliInvocation:
    """Parse and validate argv into an invocation (raises UsageError)."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        raise UsageError(f"argument parsing failed (status {exc.code})") from exc
    return CliInvocation(ns.subcommand, vars(ns))


def _load(path: str):
    if not os.path.exists(path):
        raise UsageError(f"input file not found: {path}")
    try:
        return load_sequence(path)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _atomic_write(text: str, path: str) -> None:
    dirname = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=dirname, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit_report(data, path: str) -> None:
    """Write a report as CSV with a fixed header per data kind."""
    if isinstance(data, _reexpand.SummabilityReport):
        lines = ["window,norm,increment"]
        for w, n, i in data.rows():
            lines.append(f"{w},{_fmt(n)},{_fmt(i)}")
    elif isinstance(data, _weyl.CentralCoeffTable):
        lines = ["two_l,dim,weight,value_re,value_im,mode,convention"]
        for two_l, dim, mu, re, im, mode, conv in data.rows():
            lines.append(f"{two_l},{dim},{mu},{_fmt(re)},{_fmt(im)},{mode},{conv}")
    elif isinstance(data, _weyl.Q2Diagnostic):
        lines = ["two_l,hilbert_side,plain_side,ratio"]
        for tl, h, pl, rat in zip(data.two_l, data.hilbert_side, data.plain_side, data.ratio):
            lines.append(f"{tl},{_fmt(h)},{_fmt(pl)},{_fmt(rat)}")
    elif isinstance(data, list) and data and isinstance(data[0], dict):  # bench rows
        cols = list(data[0])
        lines = [",".join(cols)]
        for row in data:
            lines.append(",".join(_fmt(row[c]) if isinstance(row[c], float) else str(row[c]) for c in cols))
    elif isinstance(data, list):  # partial sums
        lines = ["two_l,partial_sum"]
        for two_l, v in enumerate(data):
            lines.append(f"{two_l},{_fmt(v)}")
    else:
        raise TypeError(f"no CSV writer for {type(data).__name__}")
    try:
        _atomic_write("\n".join(lines) + "\n", path)
    except OSError as exc:
        raise RuntimeError(f"cannot write report to {path}: {exc}") from exc


def _require_1d(a, what: str) -> Coeff1D:
    if isinstance(a, CoeffND):
        if a.ndim != 1:
            raise UsageError(f"{what} needs a 1-D sequence, input has {a.ndim} axes")
        return a.as_coeff1d()
    return a


def _parse_weight(text, d: int) -> WeightExponent:
    if text is None:
        return WeightExponent.zero(d)
    vals = _parse_int_list(text, "--weight")
    if len(vals) != d:
        raise UsageError(f"--weight has {len(vals)} entries, input has {d} axes")
    if any(v < 0 for v in vals):
        raise UsageError("--weight entries must be >= 0")
    return WeightExponent(tuple(vals))


def _parse_half_integer(text: str, flag: str) -> Fraction:
    try:
        val = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad {flag} value {text!r}") from exc
    if (2 * val).denominator != 1 or val < 0:
        raise UsageError(f"{flag} must be a nonnegative half-integer, got {text}")
    return val


def _run_hilbert(opt) -> str:
    a = _require_1d(_load(opt["input"]), f"kind {opt['kind']!r}")
    rng = _parse_range(opt["range"])
    try:
        req = _hilbert.TransformRequest(opt["kind"], rng, opt["algorithm"])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = _hilbert.transform(a, req)
    save_sequence(out, opt["output"])
    return f"kind={opt['kind']} support={len(a.trim())} window={rng[0]}:{rng[1]}"


def _run_reexpand(opt) -> str:
    a = _load(opt["input"])
    nd = a.as_nd() if isinstance(a, Coeff1D) else a
    try:
        eta = ParityVector.from_string(opt["parity"])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if len(eta) != nd.ndim:
        raise UsageError(f"--parity has {len(eta)} axes, input has {nd.ndim}")
    q = _parse_weight(opt["weight"], nd.ndim)
    box = _parse_box(opt["box"])
    if len(box) != nd.ndim:
        raise UsageError(f"--box has {len(box)} axes, input has {nd.ndim}")
    try:
        spec = _reexpand.ReexpandSpec(
            eta=eta,
            q=q,
            output_box=tuple(box),
            subtract_mean=opt["subtract_mean"],
            boundary_tol=opt["boundary_tol"],
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if q.is_zero:
        out = _reexpand.reexpand_nd(nd, spec, opt["algorithm"])
        save_sequence(out, opt["output"])
        extra = ""
    else:
        res = _reexpand.reexpand_weighted(nd, spec, opt["algorithm"])
        save_sequence(res.raw, opt["output"])
        for w in res.warnings:
            print(f"warning: {w}", file=sys.stderr)
        extra = f" sign={res.sign:+.0f} eta_eff={''.join(map(str, res.eta_effective.bits))}"
    return f"parity={opt['parity']} q={'0' if q.is_zero else opt['weight']} box={opt['box']}{extra}"


def _run_sufficiency(opt) -> str:
    a = _require_1d(_load(opt["input"]), "sufficiency")
    windows = _parse_int_list(opt["windows"], "--windows")
    q = _parse_weight(opt["weight"], 1)
    from .sequences import weight_apply

    if not q.is_zero:
        try:
            a = weight_apply(a, q)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    try:
        report = _reexpand.summability_report(a, opt["kind"], windows, opt["algorithm"])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    emit_report(report, opt["output"])
    print(
        f"verdict={report.verdict_hint} moments=({report.moment_sum:.6g}, "
        f"{report.moment_sum_alternating:.6g}) log_weighted={report.log_weighted:.6g} "
        f"tail_hint={report.tail_hint:.3g}"
    )
    return f"kind={opt['kind']} windows={opt['windows']} verdict={report.verdict_hint}"


def _run_su2(opt) -> str:
    a = _require_1d(_load(opt["input"]), "su2")
    op = opt["op"]
    denom = _weyl.weyl_denom_sq_coeffs(_weyl.RootSystem.su2(), opt["convention"])
    if op in ("q1", "q2", "table") and opt["lmax"] is None:
        raise UsageError(f"--lmax is required for --op {op}")
    if op == "sufficiency":
        value = _weyl.su2_sufficiency(a)
        print(_fmt(value))
        return "op=sufficiency"
    if op == "character":
        if opt["level"] is None:
            raise UsageError("--l is required for --op character")
        l = _parse_half_integer(opt["level"], "--l")
        value = _weyl.character_coeff(a, l)
        print(f"{_fmt(value.real)} {_fmt(value.imag)}")
        return f"op=character l={opt['level']}"
    lmax = _parse_half_integer(opt["lmax"], "--lmax")
    if op == "q1":
        sums = _weyl.condition_q1_sum(a, lmax, denom, opt["mode"])
        if opt["output"] is None:
            raise UsageError("--output is required for --op q1")
        emit_report(sums, opt["output"])
    elif op == "q2":
        diag = _weyl.q2_diagnostic(a, lmax, denom, opt["mode"])
        if opt["output"] is None:
            raise UsageError("--output is required for --op q2")
        emit_report(diag, opt["output"])
    else:  # table
        table = _weyl.ext_fourier_table(a, lmax, denom, opt["mode"])
        if opt["output"] is None:
            raise UsageError("--output is required for --op table")
        emit_report(table, opt["output"])
    return f"op={op} lmax={opt['lmax']} mode={opt['mode']} convention={opt['convention']}"


def _run_bench(opt) -> str:
    sizes = _parse_int_list(opt["sizes"], "--sizes")
    if any(n < 4 for n in sizes):
        raise UsageError("--sizes entries must be >= 4")
    kind = opt["kind"]
    rng = np.random.default_rng(opt["seed"])
    rows = []
    for n in sizes:
        a = Coeff1D(1, rng.standard_normal(n))
        lo = -n if kind == "full" else _hilbert._KIND_FLOOR[kind]
        naive_t, fast_t = [], []
        dev = 0.0
        ref = fast = None
        for algorithm, times in (("naive", naive_t), ("fast", fast_t)):
            for rep in range(6):  # 1 warmup + 5 timed
                t0 = time.perf_counter()
                out = _hilbert._run_1d(a, kind, lo, n, algorithm)
                dt = time.perf_counter() - t0
                if rep > 0:
                    times.append(dt)
            if algorithm == "naive":
                ref = out
            else:
                fast = out
        dev = float(np.max(np.abs(ref.values - fast.values)))
        rows.append(
            {
                "kind": kind,
                "size": n,
                "naive_median_s": float(np.median(naive_t)),
                "naive_min_s": float(np.min(naive_t)),
                "naive_max_s": float(np.max(naive_t)),
                "fast_median_s": float(np.median(fast_t)),
                "fast_min_s": float(np.min(fast_t)),
                "fast_max_s": float(np.max(fast_t)),
                "max_abs_deviation": dev,
            }
        )
    emit_report(rows, opt["output"])
    return f"kind={kind} sizes={opt['sizes']}"


_RUNNERS = {
    "hilbert": _run_hilbert,
    "reexpand": _run_reexpand,
    "sufficiency": _run_sufficiency,
    "su2": _run_su2,
    "bench": _run_bench,
}


def run(invocation: CliInvocation) -> int:
    """Dispatch an invocation; returns the process exit status."""
    t0 = time.perf_counter()
    try:
        summary = _RUNNERS[invocation.subcommand](invocation.options)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    wall = time.perf_counter() - t0
    print(f"{invocation.subcommand} {summary} wall={wall:.3f}s")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        invocation = parse_args(argv)
    except UsageError:
        return 2
    return run(invocation)


if __name__ == "__main__":
    raise SystemExit(main())
