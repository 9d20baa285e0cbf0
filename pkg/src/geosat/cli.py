"""
The command line interface of geosat.

Every command first writes one JSON line {"command": ..., "config": {...}} with all resolved flags to stderr.
Exit codes: 0 on success, 1 on usage errors (bad flags, malformed files), 2 if a solver or a verification fails.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, NoReturn, Optional, Sequence, TextIO, Tuple, Union

import attrs
import numpy as np
from marshmallow import ValidationError

from geosat.analytics.coarse import coarse_radius, expected_satisfying_assignments, u_k_bound, u_k_first_moment_bound
from geosat.analytics.geometric import clique_prob, connectivity_radius
from geosat.analytics.moments import poisson_moment, tree_clause_prob, triple_probs, wedge_prob
from geosat.analytics.patterns import bicycle_bound, expected_paths, expected_snakes
from geosat.analytics.thresholds import expected_clauses, ksat_bounds, threshold_2sat
from geosat.experiments import NonBracketingIntervalError, TrialBudgetExceededError
from geosat.experiments.result_io import threshold_estimate_json, write_curve_csv
from geosat.experiments.settings_provider import configure_settings
from geosat.experiments.sweep import sweep
from geosat.experiments.threshold import find_threshold
from geosat.experiments.verification import verify_clause_density, verify_coupling, verify_moment
from geosat.generators import DimacsFormatError
from geosat.generators.dimacs import read_dimacs_file, write_dimacs
from geosat.generators.factory import GeneratedObject, generate_from_params, regenerate
from geosat.geometry.point_io import write_point_set_csv
from geosat.models.analytic_values import AnalyticValue, AnalyticValueSchema, ModelParams
from geosat.models.enums import BoundaryMode, EventKind, Metric, ModelKind, SolverEngine
from geosat.models.experiment_results import (
    CouplingReportSchema,
    ExperimentConfig,
    VerificationReportSchema,
)
from geosat.models.formula import Formula, GeneratorRecordSchema, Hypergraph
from geosat.models.point_set import PointSet
from geosat.models.settings import ExperimentSettings
from geosat.solvers import UnsupportedFormulaError, VariableLimitExceededError, WitnessVerificationError
from geosat.solvers.engine import solve
from geosat.solvers.witness import format_dimacs_verdict

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


class UsageError(Exception):
    """
    Is raised for invalid or missing command line arguments.
    """


class _ArgumentParser(argparse.ArgumentParser):
    """an ArgumentParser that raises instead of exiting, so that usage errors map to exit code 1"""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _global_flags() -> argparse.ArgumentParser:
    parser = _ArgumentParser(add_help=False)
    parser.add_argument("--seed", type=int, default=0, help="master seed (default: 0)")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes for Monte Carlo runs")
    parser.add_argument("--budget", type=float, default=None, help="ceiling on n*trials (default: $GEOSAT_BUDGET)")
    parser.add_argument("--verbose", action="store_true", help="log debug messages")
    return parser


def _model_flags() -> argparse.ArgumentParser:
    parser = _ArgumentParser(add_help=False)
    parser.add_argument("--model", choices=[kind.lower() for kind in ModelKind], default=None)
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--k", type=int, default=2)
    parser.add_argument("--d", type=int, default=1)
    parser.add_argument("--gamma", type=float, default=None)
    parser.add_argument("--mu", type=float, default=None)
    parser.add_argument("--r", type=float, default=None, help="radius of F~(n, r), G_d(n, r) and G_d(n, mu, r)")
    parser.add_argument("--param", type=float, default=None, help="the model parameter, if not given by name")
    parser.add_argument("--metric", choices=[metric.lower() for metric in Metric], default="linf")
    parser.add_argument("--boundary", choices=[mode.lower() for mode in BoundaryMode], default="cube")
    return parser


def _trial_flags() -> argparse.ArgumentParser:
    parser = _ArgumentParser(add_help=False)
    parser.add_argument("--event", choices=[event.lower() for event in EventKind], default=None)
    parser.add_argument("--event-argument", type=int, default=None, help="L_max for has_bicycle, s for snake_count")
    parser.add_argument("--engine", choices=[engine.value for engine in SolverEngine], default="auto")
    parser.add_argument("--trials", type=int, default=100)
    return parser


def build_parser() -> argparse.ArgumentParser:
    """
    the parser of all subcommands
    """
    parser = _ArgumentParser(prog="geosat", description="geometric random k-SAT and random geometric graphs")
    subparsers = parser.add_subparsers(dest="command", required=True)
    global_flags, model_flags, trial_flags = _global_flags(), _model_flags(), _trial_flags()

    generate = subparsers.add_parser("generate", parents=[global_flags, model_flags], help="draw a formula or graph")
    generate.add_argument("--out", type=Path, required=True, help="DIMACS (or edge list) output; sidecar at <out>.json")
    generate.add_argument("--points", type=Path, default=None, help="also write the points as CSV")

    solve_command = subparsers.add_parser("solve", parents=[global_flags], help="decide a DIMACS CNF")
    solve_command.add_argument("--in", dest="input", type=Path, required=True)
    solve_command.add_argument("--engine", choices=[engine.value for engine in SolverEngine], default="auto")
    solve_command.add_argument("--var-limit", type=int, default=None)

    analyze = subparsers.add_parser("analyze", parents=[global_flags, model_flags], help="evaluate a closed form")
    analyze.add_argument("formula_id", choices=sorted(_ANALYTICS))
    analyze.add_argument("--rho", type=float, default=None)
    analyze.add_argument("--s", type=int, default=3, help="snake length")
    analyze.add_argument("--length", type=int, default=None, help="path or bicycle length")
    analyze.add_argument("--order", type=int, default=None, help="moment order")
    analyze.add_argument("--u", type=int, default=None, help="number of variables, or an exact U(k)")
    analyze.add_argument("--degrees", type=int, nargs="+", default=None, help="literal degrees of a clause tree")
    analyze.add_argument("--exact", action="store_true", help="use the exact variant where there is one")

    sweep_command = subparsers.add_parser(
        "sweep", parents=[global_flags, model_flags, trial_flags], help="estimate an event along a parameter grid"
    )
    sweep_command.add_argument("--grid", type=float, nargs="+", default=None)
    sweep_command.add_argument("--start", type=float, default=None)
    sweep_command.add_argument("--stop", type=float, default=None)
    sweep_command.add_argument("--steps", type=int, default=None)
    sweep_command.add_argument("--out", type=Path, default=None, help="curve CSV (default: stdout)")

    threshold = subparsers.add_parser(
        "threshold", parents=[global_flags, model_flags, trial_flags], help="locate where an event probability is 1/2"
    )
    threshold.add_argument("--low", type=float, default=None)
    threshold.add_argument("--high", type=float, default=None)
    threshold.add_argument("--target", type=float, default=0.5)
    threshold.add_argument("--rel-tol", type=float, default=0.05)
    threshold.add_argument("--max-trials", type=int, default=10_000)

    verify = subparsers.add_parser(
        "verify", parents=[global_flags, model_flags], help="compare simulations with closed forms"
    )
    verify.add_argument("suite", choices=["density", "coupling", "moment"])
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--formula-id", default="wedge", help="for the moment suite, e.g. poisson_moment:3 or snake")

    export = subparsers.add_parser("export", parents=[global_flags], help="regenerate from a JSON sidecar")
    export.add_argument("--sidecar", type=Path, required=True)
    export.add_argument("--out", type=Path, required=True)
    export.add_argument("--points", type=Path, default=None)
    return parser


def _require(args: argparse.Namespace, name: str) -> Any:
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required here")
    return value


def _first_given(args: argparse.Namespace, *names: str) -> float:
    for name in names:
        if getattr(args, name, None) is not None:
            return getattr(args, name)
    raise UsageError(f"One of {', '.join('--' + name for name in names)} is required for this model")


_PARAMETER_FLAGS = {
    ModelKind.GAMMA: "gamma",
    ModelKind.MU: "mu",
    ModelKind.RGG_POISSON: "mu",
    ModelKind.TILDE: "r",
    ModelKind.RGG_FIXED: "r",
}


def resolve_model_params(args: argparse.Namespace, default_param: Optional[float] = None) -> ModelParams:
    """
    builds the ModelParams from the model flags; the parameter is read from --gamma/--mu/--r depending on the model
    or from --param
    :param default_param: used if neither is given (sweeps and threshold searches replace the parameter anyway)
    """
    model = ModelKind(_require(args, "model").upper())
    radius = _require(args, "r") if model == ModelKind.RGG_POISSON else None
    param = getattr(args, _PARAMETER_FLAGS[model])
    if param is None:
        param = args.param if args.param is not None else default_param
    if param is None:
        raise UsageError(f"--{_PARAMETER_FLAGS[model]} (or --param) is required for the model {model.lower()}")
    return ModelParams(
        model=model,
        n=_require(args, "n"),
        k=args.k,
        d=args.d,
        param=param,
        metric=Metric(args.metric.upper()),
        boundary_mode=BoundaryMode(args.boundary.upper()),
        radius=radius,
    )


def _write_edge_list(graph: Hypergraph, target: Path) -> None:
    with open(target, "w", encoding="utf-8") as edge_file:
        edge_file.write(f"# vertices={graph.vertex_count} k={graph.k} edges={graph.edge_count}\n")
        for edge in graph.edges:
            edge_file.write(" ".join(str(int(vertex)) for vertex in edge) + "\n")


def _write_generated(points: PointSet, drawn: GeneratedObject, out: Path, points_path: Optional[Path]) -> Dict:
    if isinstance(drawn, Formula):
        write_dimacs(drawn, out)
        count = drawn.clause_count
    else:
        _write_edge_list(drawn, out)
        count = drawn.edge_count
    if drawn.generator_record is not None:
        sidecar = Path(f"{out}.json")
        sidecar.write_text(GeneratorRecordSchema().dumps(drawn.generator_record, indent=2), encoding="utf-8")
    if points_path is not None:
        write_point_set_csv(points, points_path)
    return {"out": str(out), "points": len(points), "clauses_or_edges": count}


def _run_generate(args: argparse.Namespace, settings: ExperimentSettings, out: TextIO) -> int:
    points, drawn = generate_from_params(resolve_model_params(args), args.seed)
    print(json.dumps(_write_generated(points, drawn, args.out, args.points)), file=out)
    return EXIT_OK


def _run_export(args: argparse.Namespace, settings: ExperimentSettings, out: TextIO) -> int:
    record = GeneratorRecordSchema().loads(args.sidecar.read_text(encoding="utf-8"))
    points, drawn = regenerate(record)
    print(json.dumps(_write_generated(points, drawn, args.out, args.points)), file=out)
    return EXIT_OK


def _run_solve(args: argparse.Namespace, settings: ExperimentSettings, out: TextIO) -> int:
    formula = read_dimacs_file(args.input)
    var_limit = args.var_limit if args.var_limit is not None else settings.complete_solver_var_limit
    result = solve(formula, SolverEngine(args.engine), var_limit)
    out.write(format_dimacs_verdict(result))
    return EXIT_OK


AnalyticsResult = Union[AnalyticValue, Tuple[AnalyticValue, AnalyticValue]]

_ANALYTICS: Dict[str, Callable[[argparse.Namespace], AnalyticsResult]] = {
    "clique_prob": lambda a: clique_prob(a.k, a.d, _require(a, "rho"), BoundaryMode(a.boundary.upper())),
    "expected_clauses": lambda a: expected_clauses(resolve_model_params(a), exact=a.exact),
    "threshold_2sat": lambda a: threshold_2sat(ModelKind(_require(a, "model").upper()), a.d),
    "ksat_bounds": lambda a: ksat_bounds(a.k, a.d, ModelKind(_require(a, "model").upper())),
    "poisson_moment": lambda a: poisson_moment(_first_given(a, "mu", "param"), _require(a, "order")),
    "tree_clause_prob": lambda a: tree_clause_prob(
        _require(a, "degrees"), _first_given(a, "mu", "param"), a.d, _require(a, "n")
    ),
    "wedge_prob": lambda a: wedge_prob(_first_given(a, "mu", "param"), a.d, _require(a, "n")),
    "triple_probs": lambda a: triple_probs(_first_given(a, "mu", "param"), a.d, _require(a, "n")),
    "expected_snakes": lambda a: expected_snakes(resolve_model_params(a), a.s, exact=a.exact),
    "expected_paths": lambda a: expected_paths(resolve_model_params(a), _require(a, "length")),
    "bicycle_bound": lambda a: bicycle_bound(resolve_model_params(a), _require(a, "length")),
    "u_k_bound": lambda a: u_k_bound(a.k),
    "u_k_first_moment_bound": lambda a: u_k_first_moment_bound(a.k),
    "expected_satisfying_assignments": lambda a: expected_satisfying_assignments(_require(a, "u"), a.k),
    "coarse_radius": lambda a: coarse_radius(a.k, a.d, _first_given(a, "gamma", "param"), _require(a, "n"), a.u),
    "connectivity_radius": lambda a: connectivity_radius(_require(a, "n"), a.d, Metric(a.metric.upper())),
}


def _run_analyze(args: argparse.Namespace, settings: ExperimentSettings, out: TextIO) -> int:
    result = _ANALYTICS[args.formula_id](args)
    schema = AnalyticValueSchema()
    if isinstance(result, tuple):
        print(json.dumps([schema.dump(value) for value in result]), file=out)
    else:
        print(json.dumps(schema.dump(result)), file=out)
    return EXIT_OK


def _default_event(params: ModelParams) -> EventKind:
    return EventKind.SAT if params.model.is_formula_model() else EventKind.CONNECTED


def _experiment_config(args: argparse.Namespace, params: ModelParams, settings: ExperimentSettings) -> ExperimentConfig:
    event = EventKind(args.event.upper()) if args.event is not None else _default_event(params)
    return ExperimentConfig(
        model_params=params,
        event=event,
        trials=args.trials,
        master_seed=args.seed,
        parallelism=settings.jobs,
        event_argument=args.event_argument,
        engine=SolverEngine(args.engine),
    )


def _sweep_grid(args: argparse.Namespace) -> List[float]:
    if args.grid is not None:
        return list(args.grid)
    start, stop, steps = _require(args, "start"), _require(args, "stop"), _require(args, "steps")
    return [float(value) for value in np.linspace(start, stop, steps)]


def _run_sweep(args: argparse.Namespace, settings: ExperimentSettings, out: TextIO) -> int:
    grid = _sweep_grid(args)
    if not grid:
        raise UsageError("The grid must not be empty")
    config = _experiment_config(args, resolve_model_params(args, default_param=grid[0]), settings)
    curve = sweep(config, grid, settings)
    if args.out is None:
        write_curve_csv(curve, out)
    else:
        write_curve_csv(curve, args.out)
    return EXIT_OK


def _default_bracket(params: ModelParams, event: EventKind) -> Tuple[float, float]:
    """an interval that contains the threshold with room to spare"""
    if event == EventKind.CONNECTED and params.model == ModelKind.RGG_FIXED:
        radius = connectivity_radius(params.n, params.d, params.metric).value
        return radius / 2, 2 * radius
    if params.model in (ModelKind.GAMMA, ModelKind.MU):
        if params.k == 2:
            critical = threshold_2sat(params.model, params.d).value
            return critical / 2, 2 * critical
        lower, upper = ksat_bounds(params.k, params.d, params.model)
        return lower.value / 2, 1.5 * upper.value
    raise UsageError("--low and --high are required for this model and event")


def _run_threshold(args: argparse.Namespace, settings: ExperimentSettings, out: TextIO) -> int:
    params = resolve_model_params(args, default_param=args.low if args.low is not None else 1.0)
    config = _experiment_config(args, params, settings)
    low, high = args.low, args.high
    if low is None or high is None:
        default_low, default_high = _default_bracket(params, config.event)
        low = default_low if low is None else low
        high = default_high if high is None else high
    estimate = find_threshold(
        config,
        low,
        high,
        target=args.target,
        rel_tol=args.rel_tol,
        initial_trials=args.trials,
        max_trials=max(args.max_trials, args.trials),
        settings=settings,
    )
    print(threshold_estimate_json(estimate), file=out)
    return EXIT_OK


def _run_verify(args: argparse.Namespace, settings: ExperimentSettings, out: TextIO) -> int:
    params = resolve_model_params(args)
    if args.suite == "coupling":
        coupling_report = verify_coupling(
            params.n, params.k, params.d, params.param, args.trials, args.seed, params.metric, params.boundary_mode
        )
        print(json.dumps(CouplingReportSchema().dump(coupling_report)), file=out)
        return EXIT_OK if coupling_report.passed else EXIT_FAILURE
    if args.suite == "density":
        report = verify_clause_density(params, args.trials, args.seed, settings.jobs, settings)
    else:
        report = verify_moment(args.formula_id, params, args.trials, args.seed, settings)
    print(json.dumps(VerificationReportSchema().dump(report)), file=out)
    return EXIT_OK if report.passed else EXIT_FAILURE


_COMMANDS: Dict[str, Callable[[argparse.Namespace, ExperimentSettings, TextIO], int]] = {
    "generate": _run_generate,
    "solve": _run_solve,
    "analyze": _run_analyze,
    "sweep": _run_sweep,
    "threshold": _run_threshold,
    "verify": _run_verify,
    "export": _run_export,
}


def resolve_settings(args: argparse.Namespace) -> ExperimentSettings:
    """
    the settings from the environment, overridden by --budget and --jobs
    """
    settings = ExperimentSettings.from_environment()
    if args.budget is not None:
        settings = attrs.evolve(settings, trial_budget=int(args.budget))
    if args.jobs is not None:
        settings = attrs.evolve(settings, jobs=args.jobs)
    return settings


def _configure_logging(verbose: bool) -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(logging.DEBUG if verbose else logging.INFO)
    handler.setFormatter(logging.Formatter("%(asctime)s %(name)s %(levelname)s %(message)s"))
    logging.basicConfig(handlers=[handler], level=logging.DEBUG, force=True)


def _config_record(args: argparse.Namespace, settings: ExperimentSettings) -> str:
    config = {key: value for key, value in sorted(vars(args).items()) if key != "command"}
    config["budget"] = settings.trial_budget
    config["jobs"] = settings.jobs
    return json.dumps({"command": args.command, "config": config}, default=str, sort_keys=True)


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """
    runs the command line interface and returns the exit code
    """
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        _configure_logging(args.verbose)
        settings = resolve_settings(args)
        configure_settings(settings, overwrite=True)
        print(_config_record(args, settings), file=err)
        return _COMMANDS[args.command](args, settings, out)
    except (VariableLimitExceededError, WitnessVerificationError) as solver_error:
        print(f"solver failure: {solver_error}", file=err)
        return EXIT_FAILURE
    except NonBracketingIntervalError as bracket_error:
        print(f"threshold search failed: {bracket_error}", file=err)
        return EXIT_FAILURE
    except (
        UsageError,
        UnsupportedFormulaError,
        DimacsFormatError,
        TrialBudgetExceededError,
        ValidationError,
        ValueError,
        OSError,
    ) as error:
        print(f"usage error: {error}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
