#!/usr/bin/env python3
"""
Weighted l1 recovery toolkit

Subcommands:
    gen     Draw a Gaussian matrix, a sparse signal and a support estimate
    solve   Run (weighted) l1 minimization on files written by gen
    nsp     Compute an exact null space property constant and its witness
    bound   Evaluate the Gaussian measurement bounds and the minimal m
    phase   Run a phase-transition experiment and write CSV (and SVG)
    plot    Render an SVG heatmap from phase CSV

Exit codes: 0 success, 1 domain error, 2 I/O or parse error.
"""

import argparse
import logging
import os
import sys
from pathlib import Path

from pydantic import ValidationError

from bounds import BOUNDS, BoundInputs, evaluate_bound, invert_ratio
from errors import ArgumentError, DomainError, ParseError, Wl1Error
from experiments import (build_config, emit_csv, emit_svg, read_csv,
                         reference_curve, run_phase, threshold_curve)
from experiments.presets import DEFAULT_SEED, PRESETS
from experiments.runner import default_threads
from nsp_verifier import NspMode, NspQuery, NspSettings, nsp_constant
from recovery import WeightVector, is_unique_minimizer, solve_weighted_l1
from sensing import (Rng, SupportEstimate, gen_gaussian_matrix, gen_sparse_signal,
                     gen_support_estimate)
from textio import (format_certificate, read_index_set, read_matrix, read_vector,
                    write_certificate, write_index_set, write_matrix, write_vector)

logger = logging.getLogger("wl1")


def env_seed() -> int:
    value = os.environ.get("WL1_SEED")
    if not value:
        return DEFAULT_SEED
    try:
        return int(value, 0)
    except ValueError:
        raise ArgumentError(f"WL1_SEED must be an integer, got '{value}'") from None


def cmd_gen(args):
    seed = args.seed if args.seed is not None else env_seed()
    rng = Rng(seed)
    a = gen_gaussian_matrix(args.m, args.N, rng)
    instance = gen_sparse_signal(args.N, args.k, rng).measure(a)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_matrix(out / "A.txt", a)
    write_vector(out / "x.txt", instance.signal)
    write_vector(out / "y.txt", instance.measurements)
    write_index_set(out / "support.txt", instance.support)
    written = ["A.txt", "x.txt", "y.txt", "support.txt"]
    if args.alpha is not None:
        weight = args.w if args.w is not None else 1.0 - args.alpha
        estimate = gen_support_estimate(instance, args.alpha, args.rho, weight, rng.child(1))
        write_index_set(out / "estimate.txt", estimate.estimate)
        written.append("estimate.txt")
    logger.info(f"✅ Wrote {', '.join(written)} to {out} (seed {seed})")
    return 0


def cmd_solve(args):
    a = read_matrix(args.matrix)
    y = read_vector(args.measurements)
    n = a.shape[1]
    if args.estimate:
        if args.w is None:
            raise ArgumentError("--w is required together with --estimate")
        estimate = SupportEstimate(read_index_set(args.estimate), args.w)
        weights = WeightVector.from_estimate(estimate, n)
    else:
        weights = WeightVector.uniform(n)
    truth = read_vector(args.truth) if args.truth else None

    result = solve_weighted_l1(a, y, weights, truth=truth)
    print(f"weighted_norm {result.weighted_norm:.17g}")
    print(f"iterations {result.iterations}")
    if result.has_truth:
        print(f"relative_error {result.relative_error:.17g}")
        print(f"exact {str(result.exact).lower()}")
    if args.unique:
        unique = is_unique_minimizer(a, y, weights, result.recovered)
        print(f"unique {str(unique).lower()}")
    if args.out:
        write_vector(args.out, result.recovered)
        logger.info(f"✅ Recovered signal written to {args.out}")
    return 0


def cmd_nsp(args):
    a = read_matrix(args.matrix)
    mode = NspMode(args.mode)
    if mode is NspMode.NONUNIFORM:
        if not (args.T and args.T_tilde):
            raise ArgumentError("nonuniform mode needs --T and --T-tilde")
        query = NspQuery(mode, args.w, fixed_T=read_index_set(args.T), fixed_T_tilde=read_index_set(args.T_tilde))
    elif mode is NspMode.STANDARD:
        query = NspQuery(mode, 1.0, k=args.k, s=0)
    else:
        query = NspQuery(mode, args.w, k=args.k, s=args.s)
    try:
        settings = NspSettings(method=args.method, orthant_cap=args.orthant_cap)
    except ValidationError as e:
        raise ArgumentError(f"Invalid NSP settings: {e}") from None

    certificate = nsp_constant(a, query, settings)
    logger.info(f"✅ {certificate.summary()}")
    sys.stdout.write(format_certificate(certificate))
    if args.out:
        write_certificate(args.out, certificate)
    return 0


def cmd_bound(args):
    try:
        inputs = BoundInputs(N=args.N, k=args.k, s=args.s, alpha=args.alpha, rho=args.rho,
                             w=args.w, C=args.C, epsilon=args.eps)
    except ValidationError as e:
        raise ArgumentError(f"Invalid bound inputs: {e}") from None
    names = sorted(BOUNDS) if args.bound == "all" else [args.bound]
    print("bound,N,k,s,alpha,rho,w,C,epsilon,rhs,min_m")
    printed = 0
    for name in names:
        try:
            rhs = evaluate_bound(name, inputs)
            m = invert_ratio(rhs)
        except DomainError as e:
            # a single requested bound fails loudly; "all" skips what does not apply
            if len(names) == 1:
                raise
            logger.warning(f"⚠️  Skipping {name}: {e}")
            continue
        print(f"{name},{inputs.N},{inputs.k},{inputs.s},{inputs.alpha:.17g},{inputs.rho:.17g},"
              f"{inputs.w:.17g},{inputs.C:.17g},{inputs.epsilon:.17g},{rhs:.17g},{m}")
        printed += 1
    if not printed:
        raise DomainError("No bound applies to these inputs")
    return 0


def _write_plot(grids, path, N, rho, threshold):
    curves = [threshold_curve(grid, threshold) for grid in grids]
    references = [reference_curve(grid, N, rho) for grid in grids]
    emit_svg(grids, curves, path, references)


def cmd_phase(args):
    config = build_config(args.preset, args.config, seed=args.seed, trials=args.trials)
    grids = run_phase(config, threads=args.threads)
    emit_csv(grids, args.out)
    for grid in grids:
        logger.info(f"{grid.title}: threshold curve {threshold_curve(grid, config.threshold)}")
    if args.svg:
        _write_plot(grids, args.svg, config.N, config.rho, config.threshold)
    return 0


def cmd_plot(args):
    grids = read_csv(args.csv)
    _write_plot(grids, args.out, args.N, args.rho, args.threshold)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wl1.py",
        description="Weighted l1 sparse recovery: solvers, NSP constants, bounds and experiments",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    python wl1.py gen --m 40 --N 100 --k 8 --alpha 0.7 --out-dir run1
    python wl1.py solve --matrix run1/A.txt --measurements run1/y.txt --truth run1/x.txt
    python wl1.py nsp --mode uniform --k 2 --s 1 --w 0.5 --matrix small.txt
    python wl1.py bound --bound thm2 --k 10 --s 2 --N 500 --C 0.9 --w 0 --eps 0.01
    python wl1.py phase --preset desk --out desk.csv --svg desk.svg
    python wl1.py plot --csv desk.csv --out desk.svg
        """
    )
    parser.add_argument('-v', '--verbose', action='store_true', help='Enable verbose logging')
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Draw A, x, y and optionally a support estimate")
    gen.add_argument("--m", type=int, required=True, help="Number of measurements")
    gen.add_argument("--N", type=int, required=True, help="Signal length")
    gen.add_argument("--k", type=int, required=True, help="Sparsity")
    gen.add_argument("--alpha", type=float, help="Support estimate accuracy (omit for no estimate)")
    gen.add_argument("--rho", type=float, default=1.0, help="Estimate size ratio |T~|/k (default: 1)")
    gen.add_argument("--w", type=float, help="Weight on the estimate (default: 1 - alpha)")
    gen.add_argument("--seed", type=int, help="Seed (default: $WL1_SEED or built-in)")
    gen.add_argument("--out-dir", required=True, help="Directory for the generated files")
    gen.set_defaults(func=cmd_gen)

    solve = sub.add_parser("solve", help="Weighted l1 minimization")
    solve.add_argument("--matrix", required=True, help="Matrix file")
    solve.add_argument("--measurements", required=True, help="Measurement vector file")
    solve.add_argument("--estimate", help="Support estimate index-set file")
    solve.add_argument("--w", type=float, help="Weight on the support estimate")
    solve.add_argument("--truth", help="True signal, for the relative error")
    solve.add_argument("--unique", action="store_true", help="Also test whether the minimizer is unique")
    solve.add_argument("--out", help="Write the recovered signal here")
    solve.set_defaults(func=cmd_solve)

    nsp = sub.add_parser("nsp", help="Exact null space property constant")
    nsp.add_argument("--matrix", required=True, help="Matrix file")
    nsp.add_argument("--mode", choices=[m.value for m in NspMode], default="uniform")
    nsp.add_argument("--k", type=int, default=1, help="Order k")
    nsp.add_argument("--s", type=int, default=0, help="Error size s")
    nsp.add_argument("--w", type=float, default=1.0, help="Weight w (default: 1)")
    nsp.add_argument("--T", help="Support index-set file (nonuniform mode)")
    nsp.add_argument("--T-tilde", dest="T_tilde", help="Support estimate index-set file (nonuniform mode)")
    nsp.add_argument("--method", choices=["circuit", "orthant"], default="circuit")
    nsp.add_argument("--orthant-cap", type=int, default=18, help="Largest N attempted (default: 18)")
    nsp.add_argument("--out", help="Write the certificate here")
    nsp.set_defaults(func=cmd_nsp)

    bound = sub.add_parser("bound", help="Measurement bounds and minimal m")
    bound.add_argument("--bound", choices=sorted(BOUNDS) + ["all"], default="all")
    bound.add_argument("--N", type=int, required=True)
    bound.add_argument("--k", type=int, required=True)
    bound.add_argument("--s", type=int, default=0)
    bound.add_argument("--alpha", type=float, default=1.0, help="Estimate accuracy (thm3)")
    bound.add_argument("--rho", type=float, default=1.0, help="Estimate size ratio (thm3)")
    bound.add_argument("--w", type=float, default=1.0)
    bound.add_argument("--C", type=float, required=True, help="NSP constant target in (0, 1)")
    bound.add_argument("--eps", type=float, required=True, help="Failure probability in (0, 1)")
    bound.set_defaults(func=cmd_bound)

    phase = sub.add_parser("phase", help="Phase-transition experiment")
    phase.add_argument("--preset", choices=sorted(PRESETS), default="desk")
    phase.add_argument("--config", help="key = value overrides")
    phase.add_argument("--seed", type=int, help="Base seed (overrides $WL1_SEED)")
    phase.add_argument("--trials", type=int, help="Trials per cell")
    phase.add_argument("--threads", type=int, default=default_threads(),
                       help="Worker processes (default: available cores)")
    phase.add_argument("--out", required=True, help="CSV output path")
    phase.add_argument("--svg", help="Also render an SVG heatmap here")
    phase.set_defaults(func=cmd_phase)

    plot = sub.add_parser("plot", help="SVG heatmap from phase CSV")
    plot.add_argument("--csv", required=True)
    plot.add_argument("--out", required=True)
    plot.add_argument("--N", type=int, default=PRESETS["desk"]["N"], help="Signal length for the reference line")
    plot.add_argument("--rho", type=float, default=1.0)
    plot.add_argument("--threshold", type=float, default=0.85)
    plot.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format='%(asctime)s - %(levelname)s - %(message)s'
    )
    try:
        return args.func(args)
    except (ParseError, OSError) as e:
        logger.error(f"❌ {e}")
        return 2
    except Wl1Error as e:
        logger.error(f"❌ {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
