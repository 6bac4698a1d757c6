"""Command-line front end.

Subcommands: estimate, pairwise, hill, chi, simulate, experiment, transform.
Curve files are CSV (rows = curves, columns = grid points). Reports are JSON
with a top-level schema_version; series and tables are CSV. Errors print a
JSON object naming the failing operation to stderr and exit with 2 for parse
problems, 3 for domain/degenerate-data problems, and 1 for anything else.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from .chi import ChiSeries, chi_curve
from .curves import center, norms
from .curveio import format_curves, parse_curve_file, resample_linear, write_curve_file
from .errors import (
    DegenerateSampleError,
    DegenerateTailError,
    DomainError,
    EccError,
    GridMismatchError,
    ParseError,
)
from .estimators import PipelineReport, estimate_pipeline, pairwise_matrix
from .simulate import DgpConfig, ExperimentTable, bias_experiment, generate_paired, invert_oracle
from .tail import HillSeries, hill_series
from .transform import power_transform

SCHEMA_VERSION = 1

_PARSE_EXIT = 2
_DOMAIN_EXIT = 3
_INTERNAL_EXIT = 1


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _tail_fit_dict(fit) -> dict:
    return {"alpha_hat": fit.alpha_hat, "k": fit.k, "threshold": fit.threshold, "method": fit.method}


def _pipeline_report_dict(rep: PipelineReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "sigma_xy": rep.ecc.sigma_xy,
        "rho_xy": rep.ecc.rho_xy,
        "gamma_xy": rep.ecc.gamma_xy,
        "k": rep.ecc.k,
        "r_k": rep.ecc.r_k,
        "exceedance_indices": rep.ecc.exceedance_indices.tolist(),
        "k_method": rep.k_method,
        "centered": rep.centered,
        "tail_x": _tail_fit_dict(rep.tail_x),
        "tail_y": _tail_fit_dict(rep.tail_y),
        "transformed": rep.transformed,
        "alpha_target": rep.alpha_target,
        "tau": rep.tau,
    }


def _hill_series_csv(series: HillSeries) -> str:
    lines = ["k,alpha,lo,hi"]
    for k, a, lo, hi in zip(series.k, series.alpha_hat, series.ci_low, series.ci_high):
        lines.append(f"{k},{a:.17g},{lo:.17g},{hi:.17g}")
    return "\n".join(lines) + "\n"


def _chi_series_csv(series: ChiSeries) -> str:
    lines = ["q,chi,chibar,chi_lo,chi_hi,chibar_lo,chibar_hi,raw_chibar"]
    cols = (
        series.q, series.chi, series.chibar, series.chi_lo,
        series.chi_hi, series.chibar_lo, series.chibar_hi, series.raw_chibar,
    )
    for row in zip(*cols):
        lines.append(",".join(f"{v:.17g}" for v in row))
    return "\n".join(lines) + "\n"


def _add_pipeline_flags(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--k", type=int, default=None, help="fixed exceedance count")
    group.add_argument("--kselect", choices=["mindist", "ks"], default="mindist",
                       help="automatic k selection rule (default mindist)")
    p.add_argument("--alpha-target", type=float, default=3.0,
                   help="common tail index for the tail-equivalence transform (default 3)")
    p.add_argument("--tau", type=float, default=0.5,
                   help="tail-equivalence tolerance on |alpha_x - alpha_y| (default 0.5)")
    p.add_argument("--no-center", action="store_true", help="skip centering by the sample mean curves")


def _pipeline_kwargs(args) -> dict:
    return {
        "k": args.k,
        "k_method": "fixed" if args.k is not None else args.kselect,
        "alpha_target": args.alpha_target,
        "tau": args.tau,
        "do_center": not args.no_center,
    }


def _cmd_estimate(args) -> int:
    x = parse_curve_file(args.x)
    y = parse_curve_file(args.y)
    rep = estimate_pipeline(x, y, **_pipeline_kwargs(args))
    sys.stdout.write(json.dumps(_pipeline_report_dict(rep), indent=2) + "\n")
    return 0


def _cmd_pairwise(args) -> int:
    if len(args.inputs) < 2:
        raise DomainError("pairwise needs at least two input files")
    samples = [parse_curve_file(p) for p in args.inputs]
    labels = [Path(p).stem for p in args.inputs]
    matrix, reports = pairwise_matrix(samples, return_reports=True, **_pipeline_kwargs(args))
    lines = ["," + ",".join(labels)]
    for lab, row in zip(labels, matrix):
        lines.append(lab + "," + ",".join(f"{v:.17g}" for v in row))
    _emit("\n".join(lines) + "\n", args.output)
    if args.json is not None:
        meta = {
            "schema_version": SCHEMA_VERSION,
            "labels": labels,
            "rho_matrix": matrix.tolist(),
            "pairs": [
                {"a": labels[a], "b": labels[b], **_pipeline_report_dict(rep)}
                for (a, b), rep in sorted(reports.items())
            ],
        }
        Path(args.json).write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")
    return 0


def _cmd_hill(args) -> int:
    sample = parse_curve_file(args.input)
    values = norms(sample if args.no_center else center(sample))
    k_max = args.kmax if args.kmax is not None else values.size - 1
    series = hill_series(values, k_max)
    _emit(_hill_series_csv(series), args.output)
    return 0


def _parse_qgrid(arg: str) -> np.ndarray:
    try:
        start, stop, step = (float(tok) for tok in arg.split(":"))
    except ValueError:
        raise ParseError(f"--qgrid expects start:stop:step, got {arg!r}") from None
    if step <= 0 or stop < start:
        raise DomainError(f"bad q grid {arg!r}")
    grid = np.arange(start, stop + step * 0.5, step)
    return grid[(grid > 0.0) & (grid < 1.0)]


def _cmd_chi(args) -> int:
    x = parse_curve_file(args.x)
    y = parse_curve_file(args.y)
    if not args.no_center:
        x, y = center(x), center(y)
    series = chi_curve(norms(x), norms(y), _parse_qgrid(args.qgrid))
    _emit(_chi_series_csv(series), args.output)
    return 0


def _parse_variant(arg: str) -> dict:
    if arg == "base":
        return {"variant": "base"}
    if arg.startswith("bernoulli:"):
        try:
            p_a, p_b = (float(tok) for tok in arg.split(":", 1)[1].split(","))
        except ValueError:
            raise ParseError(f"expected bernoulli:pA,pB, got {arg!r}") from None
        return {"variant": "bernoulli", "p_a": p_a, "p_b": p_b}
    if arg.startswith("phase:"):
        try:
            delta = float(arg.split(":", 1)[1])
        except ValueError:
            raise ParseError(f"expected phase:delta, got {arg!r}") from None
        return {"variant": "phase", "delta": delta}
    raise ParseError(f"unknown variant {arg!r}")


def _cmd_simulate(args) -> int:
    extra = _parse_variant(args.variant)
    rho = 0.0
    if extra["variant"] != "bernoulli":
        rho = invert_oracle(args.rho_xy, args.alpha)
    cfg = DgpConfig(rho=rho, alpha=args.alpha, n=args.n, J=args.J, seed=args.seed, **extra)
    x, y = generate_paired(cfg)
    write_curve_file(args.out_x, x)
    write_curve_file(args.out_y, y)
    return 0


def _parse_config(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ParseError(f"{path}: file not found") from None
    cfg: dict[str, str] = {}
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"{path}: expected key = value", row=i)
        key, value = (part.strip() for part in line.split("=", 1))
        cfg[key.lower()] = value
    return cfg


def _cfg_list(cfg: dict, key: str, conv, default=None):
    if key not in cfg:
        if default is None:
            raise ParseError(f"experiment config is missing required key {key!r}")
        return default
    try:
        return [conv(tok.strip()) for tok in cfg[key].split(",") if tok.strip()]
    except ValueError:
        raise ParseError(f"bad value for config key {key!r}: {cfg[key]!r}") from None


def _cmd_experiment(args) -> int:
    cfg = _parse_config(args.config)
    targets = _cfg_list(cfg, "rho_xy", float)
    alphas = _cfg_list(cfg, "alpha", float)
    ns = _cfg_list(cfg, "n", int)
    reps = _cfg_list(cfg, "reps", int)[0]
    seed = _cfg_list(cfg, "seed", int)[0]  # required: runs must be reproducible
    k_method = cfg.get("k_method", "mindist")
    if k_method not in ("mindist", "ks", "fixed"):
        raise ParseError(f"bad k_method {k_method!r}")
    k_fixed = _cfg_list(cfg, "k", int)[0] if k_method == "fixed" else None
    J = _cfg_list(cfg, "j", int, default=[100])[0]
    noise_variance = _cfg_list(cfg, "noise_variance", float, default=[0.25])[0]

    threads = args.threads
    if threads is None:
        threads = int(os.environ.get("ECC_THREADS", "1"))

    rows = []
    for cell, alpha in enumerate(alphas):
        for j, n in enumerate(ns):
            table = bias_experiment(
                targets, alpha=alpha, n=n, reps=reps, k_method=k_method,
                seed=seed + 1_000_003 * (cell * len(ns) + j), J=J,
                k_fixed=k_fixed, threads=threads, noise_variance=noise_variance,
            )
            rows.extend(table.rows)
    table = ExperimentTable(rows=rows)
    _emit(table.to_wide_csv(), args.out_csv)
    if args.out_json is not None:
        Path(args.out_json).write_text(table.to_json() + "\n", encoding="utf-8")
    return 0


def _cmd_transform(args) -> int:
    sample = parse_curve_file(args.input)
    out = power_transform(sample, args.alpha_source, args.alpha_target)
    _emit(format_curves(out), args.output)
    return 0


def _cmd_resample(args) -> int:
    sample = parse_curve_file(args.input)
    out = resample_linear(sample, args.J)
    _emit(format_curves(out), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecc",
        description="Extremal correlation between paired samples of discretized curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", help="full pipeline on one pair of curve files; JSON report on stdout")
    p.add_argument("--x", required=True, help="curve file for the first margin")
    p.add_argument("--y", required=True, help="curve file for the second margin")
    _add_pipeline_flags(p)
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser("pairwise", help="pairwise rho matrix across curve files; CSV on stdout")
    p.add_argument("--inputs", nargs="+", required=True, help="two or more curve files")
    p.add_argument("--output", default=None, help="matrix CSV path (default stdout)")
    p.add_argument("--json", default=None, help="write per-pair JSON metadata to this path")
    _add_pipeline_flags(p)
    p.set_defaults(func=_cmd_pairwise)

    p = sub.add_parser("hill", help="Hill plot series of the centered-norm tail; CSV on stdout")
    p.add_argument("--input", required=True)
    p.add_argument("--kmax", type=int, default=None, help="largest k in the series (default n-1)")
    p.add_argument("--no-center", action="store_true")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_hill)

    p = sub.add_parser("chi", help="chi/chibar diagnostics of the paired norms; CSV on stdout")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--qgrid", default="0.5:0.98:0.02", help="start:stop:step inside (0,1)")
    p.add_argument("--no-center", action="store_true")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("simulate", help="generate a synthetic paired sample into two curve files")
    p.add_argument("--rho-xy", type=float, default=0.0,
                   help="population extremal correlation target (ignored for bernoulli)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--J", type=int, default=100)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--variant", default="base", help="base | bernoulli:pA,pB | phase:delta")
    p.add_argument("--out-x", required=True)
    p.add_argument("--out-y", required=True)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("experiment", help="Monte Carlo bias table from a key=value config file")
    p.add_argument("--config", required=True)
    p.add_argument("--threads", type=int, default=None,
                   help="parallel replication workers (default: ECC_THREADS or 1)")
    p.add_argument("--out-csv", default=None, help="wide CSV path (default stdout)")
    p.add_argument("--out-json", default=None, help="full-precision JSON path")
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("transform", help="power-transform a curve file to a target tail index")
    p.add_argument("--input", required=True)
    p.add_argument("--alpha-source", type=float, required=True)
    p.add_argument("--alpha-target", type=float, required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("resample", help="linearly resample a curve file onto a new grid")
    p.add_argument("--input", required=True)
    p.add_argument("--J", type=int, required=True, help="target grid size")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_resample)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _print_error(args.command, exc, _PARSE_EXIT)
        return _PARSE_EXIT
    except (DomainError, DegenerateTailError, DegenerateSampleError, GridMismatchError) as exc:
        _print_error(args.command, exc, _DOMAIN_EXIT)
        return _DOMAIN_EXIT
    except EccError as exc:
        _print_error(args.command, exc, _INTERNAL_EXIT)
        return _INTERNAL_EXIT
    except Exception as exc:  # anything unexpected is an internal error
        _print_error(args.command, exc, _INTERNAL_EXIT)
        return _INTERNAL_EXIT


def _print_error(operation: str, exc: Exception, code: int) -> None:
    obj = {
        "schema_version": SCHEMA_VERSION,
        "error": {
            "code": code,
            "operation": operation,
            "type": exc.__class__.__name__,
            "message": str(exc),
        },
    }
    sys.stderr.write(json.dumps(obj) + "\n")


if __name__ == "__main__":
    sys.exit(main())
