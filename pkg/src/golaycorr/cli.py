"""Command-line driver: ``golaycorr <verb> ...``.

Exit status is 0 on success, 1 for domain errors (inadmissible length,
non-Golay input to a constructor) and 2 for usage, file and parse errors.
"""

from __future__ import annotations

import argparse
import json
import math
import statistics
import sys
import time
from pathlib import Path

import numpy as np

from . import explore
from .correlation import spectrum, spectrum_fast, spectrum_naive
from .criteria import DemeritReport, EqualityCase, classify_equality, demerit_report
from .golay import GolayCertificate, GolayError, InadmissibleLengthError, admissible_exponents, construct_for_length, is_golay_pair
from .sequences import DEFAULT_TOL, SequenceParseError, ZeroSequenceError, energy, format_sequence, read_sequences

__all__ = ["main", "dispatch", "format_report", "bench"]


class UsageError(Exception):
    pass


def _num(x):
    """12 significant digits; NaN becomes null."""
    if x is None:
        return None
    x = float(x)
    if math.isnan(x):
        return None
    return float(f"{x:.12g}")


def _record(kind: str, **fields) -> str:
    out = {"record": kind}
    for k, v in fields.items():
        out[k] = _num(v) if isinstance(v, (float, np.floating)) else v
    return json.dumps(out)


def format_report(report: DemeritReport, case: EqualityCase, cert: GolayCertificate | None = None,
                  machine: bool = False) -> str:
    """Render a demerit report with its equality case (and optional Golay certificate)."""
    if machine:
        extra = {}
        if cert is not None:
            extra = {"golay": cert.verdict, "golay_residual": float(cert.max_residual)}
        return _record(
            "analyze",
            adf_f=report.adf_f, adf_g=report.adf_g, cdf=report.cdf, psc=report.psc,
            lower_slack=report.lower_slack, upper_slack=report.upper_slack,
            case=case.tag, **{"lambda": _num(case.lam), "mu": _num(case.mu)},
            residual=float(case.residual), **extra,
        )
    rows = [
        ("ADF(f)", f"{report.adf_f:.12g}"),
        ("ADF(g)", f"{report.adf_g:.12g}"),
        ("CDF(f,g)", f"{report.cdf:.12g}"),
        ("PSC(f,g)", f"{report.psc:.12g}"),
        ("lower slack", f"{report.lower_slack:.12g}"),
        ("upper slack", f"{report.upper_slack:.12g}"),
        ("case", str(case)),
        ("fit residual", f"{case.residual:.3g}"),
    ]
    if cert is not None:
        rows.append(("Golay pair", f"{cert.verdict} (residual {cert.max_residual:.3g})"))
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def _load_pair(paths: list[str]):
    seqs = []
    for p in paths:
        if not Path(p).is_file():
            raise UsageError(f"cannot read {p}")
        got = read_sequences(p)
        if not got:
            raise UsageError(f"{p}: no sequence found")
        seqs.extend(got[:1] if len(paths) == 2 else got[:2])
    if len(seqs) != 2:
        raise UsageError("need two sequences: two files, or one file with two lines")
    for s in seqs:
        if s.is_zero:
            raise ZeroSequenceError("all-zero sequence")
    return seqs


def _fast_flag(args):
    return {"fast": True, "naive": False}.get(args.method)


def _cmd_analyze(args) -> str:
    if len(args.files) != 2:
        raise UsageError("analyze takes two sequence files")
    f, g = _load_pair(args.files)
    fast = _fast_flag(args)
    report = demerit_report(f, g, fast)
    case = classify_equality(f, g, args.tol, fast)
    cert = is_golay_pair(f, g, args.tol, fast)
    if args.dump_spectrum:
        Path(args.dump_spectrum).write_text(spectrum(f, g, fast).to_text())
    out = format_report(report, case, cert, machine=args.json)
    if not args.json and report.near_boundary(args.tol):
        out += "\nnote: a slack lies within 10x of the tolerance"
    return out


def _cmd_verify(args) -> str:
    f, g = _load_pair(args.files)
    cert = is_golay_pair(f, g, args.tol, _fast_flag(args))
    if args.json:
        return _record("verify-golay", verdict=cert.verdict, max_residual=float(cert.max_residual),
                       length_f=cert.lengths[0], length_g=cert.lengths[1], threshold=float(cert.threshold))
    return (f"verdict       {cert.verdict}\nmax residual  {cert.max_residual:.12g}\n"
            f"lengths       {cert.lengths[0]}, {cert.lengths[1]}")


def _cmd_construct(args) -> str:
    f, g = construct_for_length(args.length)
    cert = is_golay_pair(f, g)
    if not cert:
        raise GolayError("constructed pair failed verification")
    if args.json:
        a, b, c = admissible_exponents(args.length)
        return _record("construct", length=args.length, a=a, b=b, c=c, f=format_sequence(f),
                       g=format_sequence(g), verdict=cert.verdict, max_residual=float(cert.max_residual))
    return f"% Golay pair of length {args.length}\n{format_sequence(f)}\n{format_sequence(g)}"


def _cmd_search(args) -> str:
    if args.mode == "exhaustive":
        res = explore.exhaustive_min_psc(args.length, args.tol, args.workers)
    else:
        res = explore.local_search_min_psc(args.length, args.iterations, args.restarts, args.seed,
                                           args.tol, args.workers)
    if args.dump_argmin:
        lines = []
        for f, g in res.argmin_pairs:
            lines += [format_sequence(f), format_sequence(g), ""]
        Path(args.dump_argmin).write_text("\n".join(lines))
    best = res.best_pair
    if args.json:
        return _record("search", mode=res.mode, length=res.length, min_psc=res.min_psc,
                       argmin_count=res.argmin_count, golay_count=res.golay_count,
                       near_boundary=res.near_boundary,
                       best_f=format_sequence(best[0]), best_g=format_sequence(best[1]))
    return "\n".join([
        f"mode          {res.mode}",
        f"length        {res.length}",
        f"min PSC       {res.min_psc:.12g}",
        f"argmin count  {res.argmin_count}",
        f"Golay count   {res.golay_count}",
        f"best pair     {format_sequence(best[0])} {format_sequence(best[1])}",
        f"elapsed       {res.elapsed:.3f} s",
    ])


def _cmd_montecarlo(args) -> str:
    st = explore.monte_carlo(args.length, args.samples, args.seed, args.workers)
    expected_adf = 1 - 1 / args.length
    if args.json:
        return _record("montecarlo", length=st.length, samples=st.samples, seed=st.seed,
                       mean_adf=st.mean_adf, se_adf=st.se_adf, mean_cdf=st.mean_cdf, se_cdf=st.se_cdf,
                       mean_psc=st.mean_psc, se_psc=st.se_psc, expected_adf=expected_adf)
    return "\n".join([
        f"length {st.length}, samples {st.samples}, seed {st.seed}",
        f"mean ADF  {st.mean_adf:.6f} +- {st.se_adf:.6f}   (1 - 1/l = {expected_adf:.6f})",
        f"mean CDF  {st.mean_cdf:.6f} +- {st.se_cdf:.6f}   (expected 1)",
        f"mean PSC  {st.mean_psc:.6f} +- {st.se_psc:.6f}",
    ])


def bench(lengths, repetitions: int = 3, seed: int = 0) -> list[dict]:
    """Median wall time of the naive and fast spectra on random complex pairs."""
    rng = np.random.default_rng(seed)
    rows = []
    for n in lengths:
        f = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        g = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        times = {}
        out = {}
        for name, fn in (("naive", spectrum_naive), ("fast", spectrum_fast)):
            ts = []
            for _ in range(repetitions):
                t0 = time.perf_counter()
                out[name] = fn(f, g)
                ts.append(time.perf_counter() - t0)
            times[name] = statistics.median(ts)
        scale = math.sqrt(energy(f) * energy(g))
        dev = float(np.max(np.abs(out["naive"].values - out["fast"].values)))
        rows.append({"length": n, "naive_s": times["naive"], "fast_s": times["fast"],
                     "speedup": times["naive"] / max(times["fast"], 1e-12),
                     "max_deviation": dev, "tolerance": 1e-8 * scale, "ok": dev <= 1e-8 * scale})
    return rows


def _cmd_bench(args) -> str:
    try:
        lengths = [int(x) for x in args.lengths.split(",")]
    except ValueError:
        raise UsageError("--lengths takes comma-separated integers") from None
    if any(n < 1 for n in lengths):
        raise UsageError("lengths must be positive")
    rows = bench(lengths, args.repetitions, args.seed)
    if args.json:
        return "\n".join(_record("bench", **r) for r in rows)
    head = f"{'length':>8} {'naive s':>10} {'fast s':>10} {'speedup':>9} {'max dev':>10} {'tol':>10} ok"
    body = [f"{r['length']:>8} {r['naive_s']:>10.4g} {r['fast_s']:>10.4g} {r['speedup']:>9.1f} "
            f"{r['max_deviation']:>10.3g} {r['tolerance']:>10.3g} {r['ok']}" for r in rows]
    return "\n".join([head] + body)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="relative tolerance (default 1e-9)")
    common.add_argument("--json", action="store_true", help="one JSON record per line")
    method = common.add_mutually_exclusive_group()
    method.add_argument("--fast", dest="method", action="store_const", const="fast")
    method.add_argument("--naive", dest="method", action="store_const", const="naive")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=1)

    p = argparse.ArgumentParser(prog="golaycorr", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    a = sub.add_parser("analyze", parents=[common], help="demerit factors, PSC and equality case")
    a.add_argument("files", nargs="+")
    a.add_argument("--dump-spectrum", metavar="PATH")
    a.set_defaults(run=_cmd_analyze)

    v = sub.add_parser("verify-golay", parents=[common], help="certify a Golay pair")
    v.add_argument("files", nargs="+")
    v.set_defaults(run=_cmd_verify)

    c = sub.add_parser("construct", parents=[common], help="binary Golay pair of length 2^a 10^b 26^c")
    c.add_argument("--length", type=int, required=True)
    c.set_defaults(run=_cmd_construct)

    s = sub.add_parser("search", parents=[common], help="minimum PSC over binary pairs")
    s.add_argument("--length", type=int, required=True)
    s.add_argument("--mode", choices=["exhaustive", "local"], default="exhaustive")
    s.add_argument("--iterations", type=int, default=1000)
    s.add_argument("--restarts", type=int, default=20)
    s.add_argument("--dump-argmin", metavar="PATH")
    s.set_defaults(run=_cmd_search)

    m = sub.add_parser("montecarlo", parents=[common], help="mean ADF/CDF/PSC of random pairs")
    m.add_argument("--length", type=int, required=True)
    m.add_argument("--samples", type=int, default=10000)
    m.set_defaults(run=_cmd_montecarlo)

    b = sub.add_parser("bench", parents=[common], help="naive vs fast spectrum timing")
    b.add_argument("--lengths", default="256,1024,4096")
    b.add_argument("--repetitions", type=int, default=3)
    b.set_defaults(run=_cmd_bench)
    return p


def dispatch(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.workers < 1:
            raise UsageError("--workers must be >= 1")
        out = args.run(args)
    except (InadmissibleLengthError, GolayError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except (UsageError, SequenceParseError, ZeroSequenceError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    print(out, file=stdout)
    return 0


def main():
    sys.exit(dispatch())
