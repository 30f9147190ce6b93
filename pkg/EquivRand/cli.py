""" Command line entry point

Every sub-command prints its result table to stdout. With ``--out-dir`` the
same table is also written as CSV and JSON, each carrying a provenance block
with the full configuration and seed.
"""
import argparse
import logging
from pathlib import Path
import sys

import pandas as pd

from . import settings
from .errors import ConfigurationError, EquivRandError, InputDomainError
from .harness import COVID_TABLE_BOUNDS, oracle_check, simulate_family, synthetic_family
from .MonteCarloEngine import MonteCarloEngine
from .multiplicity import ecdf_curve, schweder_k0
from .outputhelper import write_csv, write_json
from .power import CENTERING_RULES, argmax_power_theta, cdf_curve, detect_nonmonotone, power_vs_delta, power_vs_n
from .pvalues import draw_pvalue, draw_pvalue_seeded
from .regions import build_family, load_family, load_regions, parse_column_mapping, read_csv
from .types import CurveSeries, EquivProblem, SimulationSpec
from .types.TableRow import COLUMNS as TABLE_COLUMNS
from .utils import parse_grid, parse_int_range, provenance

logger = logging.getLogger(__name__)

LEVEL_GRID = "0.01:0.99:0.01"


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity and verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def _config(args):
    return {key: value for key, value in sorted(vars(args).items())
            if key not in ("func", "verbose", "out_dir", "overwrite", "workers") and value is not None}


def _emit(args, name, frame, payload):
    print(frame.to_csv(index=False, float_format=settings.FLOAT_FORMAT, lineterminator="\n"), end="")
    if args.out_dir is None:
        return
    record = provenance(args.command, _config(args), args.seed)
    out_dir = Path(args.out_dir)
    write_csv(frame, out_dir / (name + ".csv"), record, exclusive=not args.overwrite)
    write_json(payload, out_dir / (name + ".json"), record, exclusive=not args.overwrite)
    logger.info("wrote %s.csv and %s.json to %s", name, name, out_dir)


def _emit_curve(args, name, series):
    _emit(args, name, series.to_frame(), series.as_dict())


def _spec(args):
    return SimulationSpec(seed=args.seed, reps=getattr(args, "reps", 1), c=args.c,
                          lambda_=getattr(args, "lambda_", settings.DEFAULT_LAMBDA),
                          alpha=getattr(args, "alpha", settings.DEFAULT_ALPHA))


def _engine(args):
    engine = MonteCarloEngine(_spec(args), workers=args.workers)
    engine.on_chunk_done += lambda done, total: logger.info("replicate chunk %d/%d done", done, total)
    engine.on_row_done += lambda row: logger.info("row (%.4f, %.4f) done", row.theta1, row.theta2)
    return engine


def _regions(args):
    path = args.regions or settings.default_regions_path()
    records, report = load_regions(path, parse_column_mapping(args.columns))
    logger.info("%d regions retained, %d dropped", report.retained, len(report.dropped))
    return records


def _family(args):
    if args.family:
        return load_family(args.family)
    if args.synthetic:
        return synthetic_family(1000, 0.7, 50, 0.18, 0.37, 0.25, 0.75)
    if args.theta1 is None or args.theta2 is None:
        raise ConfigurationError("give --family, --synthetic or --theta1 and --theta2 for a regions family")
    return build_family(_regions(args), args.theta1, args.theta2)


def _parse_bounds(text):
    bounds = []
    for item in text.split(","):
        try:
            theta1, theta2 = (float(part) for part in item.split(":"))
        except ValueError:
            raise ConfigurationError("cannot parse bounds '%s', expected theta1:theta2" % item)
        bounds.append((theta1, theta2))
    return bounds


def _read_pvalues(path):
    frame = read_csv(path, header=None, comment="#", dtype=str, skip_blank_lines=True)
    column = frame.iloc[:, 0].str.strip()
    if pd.to_numeric(column.iloc[:1], errors="coerce").isna().all():
        header = [str(v).strip() for v in frame.iloc[0]]
        frame = frame.iloc[1:]
        column = frame.iloc[:, header.index("pvalue") if "pvalue" in header else 0].str.strip()
    values = pd.to_numeric(column, errors="coerce")
    if values.isna().any():
        raise InputDomainError("%s contains entries that are not numbers" % path)
    return values.to_numpy(dtype=float)


def cmd_pvalue(args):
    problem = EquivProblem(args.n, args.theta1, args.theta2)
    if (args.u is None) != (args.u_tilde is None):
        raise ConfigurationError("--u and --u-tilde go together")
    if args.u is None:
        draw = draw_pvalue_seeded(problem, args.s, args.seed, args.c)
    else:
        draw = draw_pvalue(problem, args.s, args.u, args.u_tilde, args.c)
    record = draw.as_dict()
    for key in ("p_lower", "p_upper", "p_ump", "p_rand2"):
        print("%s=%s" % (key, settings.FLOAT_FORMAT % record[key]))
    if args.out_dir is not None:
        write_json(record, Path(args.out_dir) / "pvalue.json", provenance(args.command, _config(args), args.seed),
                   exclusive=not args.overwrite)
    return 0


def cmd_cdf(args):
    problem = EquivProblem(args.n, args.theta1, args.theta2)
    _emit_curve(args, "cdf", cdf_curve(problem, args.theta, args.c, parse_grid(args.t_grid)))
    return 0


def cmd_power_vs_n(args):
    series = power_vs_n(args.theta1, args.theta2, args.theta, args.c, args.level, parse_int_range(args.n_range),
                        workers=args.workers)
    for method, drops in detect_nonmonotone(series).items():
        if drops:
            logger.info("%s power drops at n=%s", method, ", ".join(str(x) for x, _ in drops))
    _emit_curve(args, "power_vs_n", series)
    return 0


def cmd_max_power(args):
    problem = EquivProblem(args.n, args.theta1, args.theta2)
    results = argmax_power_theta(problem, args.c, args.level, args.grid_step, workers=args.workers)
    frame = pd.DataFrame([r.as_dict() for r in results], columns=["method", "argmax_theta", "max_power", "grid_step"])
    _emit(args, "max_power", frame, frame.to_dict("records"))
    return 0


def cmd_power_vs_delta(args):
    series = power_vs_delta(args.theta, args.c, args.level, parse_grid(args.delta_grid), args.centering, args.n,
                            workers=args.workers)
    _emit_curve(args, "power_vs_delta", series)
    return 0


def cmd_estimate_pi0(args):
    if args.pvalues:
        estimates = {"file": schweder_k0(_read_pvalues(args.pvalues), args.lambda_)}
    else:
        simulated = simulate_family(_family(args), _spec(args), args.replicate)
        estimates = {method: schweder_k0(simulated[method], args.lambda_) for method in ("UMP", "RAND2")}
    frame = pd.DataFrame([dict(source=name, **estimate.as_dict()) for name, estimate in estimates.items()])
    _emit(args, "pi0", frame, frame.to_dict("records"))
    return 0


def cmd_ecdf(args):
    family = _family(args)
    simulated = simulate_family(family, _spec(args), args.replicate)
    grid = parse_grid(args.t_grid)
    series = CurveSeries(grid, ecdf_curve(simulated["UMP"], grid), ecdf_curve(simulated["RAND2"], grid),
                         metadata={"k": family.k, "k0": family.k0, "replicate": args.replicate, "c": args.c})
    _emit_curve(args, "ecdf", series)
    return 0


def cmd_simulate_table(args):
    bounds = _parse_bounds(args.bounds) if args.bounds else [row[:2] for row in COVID_TABLE_BOUNDS]
    rows = _engine(args).table(_regions(args), bounds)
    frame = pd.DataFrame([row.as_record() for row in rows], columns=list(TABLE_COLUMNS))
    _emit(args, "table", frame, frame.to_dict("records"))
    return 0


def cmd_fwer(args):
    family = _family(args)
    result = _engine(args).fwer_estimate(family)
    frame = pd.DataFrame([(method, fwer, stderr, family.k, family.k0) for method, (fwer, stderr) in result.items()],
                         columns=["method", "fwer", "stderr", "k", "k0"])
    _emit(args, "fwer", frame, frame.to_dict("records"))
    return 0


def cmd_lambda_sweep(args):
    series = _engine(args).lambda_sweep(_family(args), parse_grid(args.lambda_grid))
    _emit_curve(args, "lambda_sweep", series)
    return 0


def cmd_oracle_check(args):
    result = oracle_check(n_values=range(1, args.max_n + 1))
    print("cases=%d max_deviation=%.3e" % (result["cases"], result["max_deviation"]))
    if args.out_dir is not None:
        write_json(result, Path(args.out_dir) / "oracle_check.json", provenance(args.command, _config(args)),
                   exclusive=not args.overwrite)
    if result["max_deviation"] > args.tolerance:
        print("deviation above %g at %s" % (args.tolerance, result["worst"]), file=sys.stderr)
        return 1
    return 0


def _common():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=settings.DEFAULT_SEED, help="seed of every random stream")
    common.add_argument("--out-dir", help="also write CSV and JSON results into this directory")
    common.add_argument("--overwrite", action="store_true", help="replace existing result files")
    common.add_argument("--workers", type=int, default=settings.default_workers(), help="worker threads")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    return common


def _add_problem(parser, n=True):
    if n:
        parser.add_argument("--n", type=int, required=True, help="sample size")
    parser.add_argument("--theta1", type=float, required=True, help="lower equivalence bound")
    parser.add_argument("--theta2", type=float, required=True, help="upper equivalence bound")


def _add_family(parser):
    parser.add_argument("--family", help="family CSV (label, n, theta_true, theta1, theta2)")
    parser.add_argument("--synthetic", action="store_true", help="k=1000, pi0=0.7 illustration family")
    parser.add_argument("--regions", help="region snapshot CSV, the vendored snapshot by default")
    parser.add_argument("--columns", help="column mapping, e.g. region=Province_State,confirmed=Confirmed")
    parser.add_argument("--theta1", type=float, help="lower bound of a regions family")
    parser.add_argument("--theta2", type=float, help="upper bound of a regions family")


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="equivrand", description="Randomized p-values for binomial equivalence "
                                                                   "tests and adaptive multiple testing.")
    sub = parser.add_subparsers(dest="command", required=True)
    c_opt = dict(type=float, default=settings.DEFAULT_C, help="second-stage constant c")
    level_opt = dict(type=float, default=settings.DEFAULT_LEVEL, help="level t")

    p = sub.add_parser("pvalue", parents=[common], help="UMP and RAND2 p-values of one observation")
    _add_problem(p)
    p.add_argument("--s", type=int, required=True, help="observed count")
    p.add_argument("--c", **c_opt)
    p.add_argument("--u", type=float, help="randomizer U, drawn from --seed if omitted")
    p.add_argument("--u-tilde", type=float, help="second-stage uniform")
    p.set_defaults(func=cmd_pvalue)

    p = sub.add_parser("cdf", parents=[common], help="CDFs of both p-values over a level grid")
    _add_problem(p)
    p.add_argument("--theta", type=float, required=True, help="true parameter")
    p.add_argument("--c", **c_opt)
    p.add_argument("--t-grid", default=LEVEL_GRID, help="a,b,c or start:stop:step")
    p.set_defaults(func=cmd_cdf)

    p = sub.add_parser("power-vs-n", parents=[common], help="power against the sample size")
    _add_problem(p, n=False)
    p.add_argument("--theta", type=float, required=True, help="alternative in (theta1, theta2)")
    p.add_argument("--c", **c_opt)
    p.add_argument("--level", **level_opt)
    p.add_argument("--n-range", default="1:300", help="inclusive start:stop")
    p.set_defaults(func=cmd_power_vs_n)

    p = sub.add_parser("max-power", parents=[common], help="alternative with the largest power")
    _add_problem(p)
    p.add_argument("--c", **c_opt)
    p.add_argument("--level", **level_opt)
    p.add_argument("--grid-step", type=float, default=0.005)
    p.set_defaults(func=cmd_max_power)

    p = sub.add_parser("power-vs-delta", parents=[common], help="power against the equivalence limit")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--c", **c_opt)
    p.add_argument("--level", **level_opt)
    p.add_argument("--delta-grid", default="0.05:0.95:0.05")
    p.add_argument("--centering", default="symmetric", choices=sorted(CENTERING_RULES))
    p.set_defaults(func=cmd_power_vs_delta)

    p = sub.add_parser("estimate-pi0", parents=[common], help="Schweder-Spjotvoll estimate of k0 and pi0")
    p.add_argument("--pvalues", help="p-value file, one value per line or a 'pvalue' column")
    _add_family(p)
    p.add_argument("--replicate", type=int, default=0, help="replicate id of a simulated family")
    p.add_argument("--lambda", dest="lambda_", type=float, default=settings.DEFAULT_LAMBDA)
    p.add_argument("--c", **c_opt)
    p.set_defaults(func=cmd_estimate_pi0)

    p = sub.add_parser("ecdf", parents=[common], help="ECDF of one simulated replicate of a family")
    _add_family(p)
    p.add_argument("--replicate", type=int, default=0)
    p.add_argument("--c", **c_opt)
    p.add_argument("--t-grid", default=LEVEL_GRID)
    p.set_defaults(func=cmd_ecdf)

    p = sub.add_parser("simulate-table", parents=[common], help="mean k0 estimates per pair of bounds")
    p.add_argument("--regions", help="region snapshot CSV, the vendored snapshot by default")
    p.add_argument("--columns", help="column mapping, e.g. region=Province_State")
    p.add_argument("--bounds", help="theta1:theta2 pairs separated by commas, the reference rows by default")
    p.add_argument("--reps", type=int, default=settings.DEFAULT_REPS)
    p.add_argument("--c", **c_opt)
    p.add_argument("--lambda", dest="lambda_", type=float, default=settings.DEFAULT_LAMBDA)
    p.set_defaults(func=cmd_simulate_table)

    p = sub.add_parser("fwer", parents=[common], help="familywise error of adaptive Bonferroni")
    _add_family(p)
    p.add_argument("--reps", type=int, default=settings.DEFAULT_REPS)
    p.add_argument("--alpha", type=float, default=settings.DEFAULT_ALPHA)
    p.add_argument("--c", **c_opt)
    p.add_argument("--lambda", dest="lambda_", type=float, default=settings.DEFAULT_LAMBDA)
    p.set_defaults(func=cmd_fwer)

    p = sub.add_parser("lambda-sweep", parents=[common], help="mean k0 estimates over a grid of lambda values")
    _add_family(p)
    p.add_argument("--lambda-grid", default="0.05:0.95:0.05", help="a,b,c or start:stop:step inside [0, 1)")
    p.add_argument("--reps", type=int, default=settings.DEFAULT_REPS)
    p.add_argument("--c", **c_opt)
    p.set_defaults(func=cmd_lambda_sweep)

    p = sub.add_parser("oracle-check", parents=[common], help="compare analytic CDFs with enumeration")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--tolerance", type=float, default=1e-10)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except EquivRandError as exc:
        logger.debug("command failed", exc_info=True)
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
