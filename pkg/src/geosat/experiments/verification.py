"""
Verification suites that compare simulations with the closed forms of geosat.analytics.
Each suite returns a report with the empirical mean, the analytic value and the z-score of their difference.
"""

import math
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from geosat.analytics import UnsupportedModelError
from geosat.analytics.moments import poisson_moment, triple_probs, wedge_prob
from geosat.analytics.patterns import expected_snakes
from geosat.analytics.thresholds import expected_clauses
from geosat.experiments import DegenerateParametersError, experiment_logger
from geosat.experiments.engine import run_trials
from geosat.experiments.rng import RngStream, stream_from_seed, trial_seed
from geosat.generators.coupling import expected_extra_heads, generate_discrete_coupled
from geosat.generators.formulas import mu_radius
from geosat.models.analytic_values import AnalyticValue, ModelParams
from geosat.models.coupling import CollisionReport
from geosat.models.enums import BoundaryMode, EventKind, Metric, ModelKind
from geosat.models.experiment_results import CouplingReport, ExperimentConfig, VerificationReport, z_score
from geosat.models.settings import ExperimentSettings

MIN_EXPECTED_CLAUSES = 30
PATTERN_CHUNK_SIZE = 20_000  #: trials simulated at once by the literal pattern checks

#: the 2-clauses of each pattern as pairs of literal indices
LITERAL_PATTERNS: Dict[str, Tuple[int, Tuple[Tuple[int, int], ...]]] = {
    "wedge": (3, ((0, 1), (0, 2))),
    "triple_path": (4, ((0, 1), (1, 2), (2, 3))),
    "triple_star": (4, ((0, 1), (0, 2), (0, 3))),
}


def _report(
    check_id: str, samples: np.ndarray, analytic: AnalyticValue, params: Optional[ModelParams]
) -> VerificationReport:
    trials = len(samples)
    mean = float(samples.mean())
    standard_error = float(samples.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    report = VerificationReport(
        check_id=check_id,
        trials=trials,
        empirical_mean=mean,
        standard_error=standard_error,
        analytic=analytic,
        z_score=z_score(mean, standard_error, analytic.value),
        params=params,
    )
    experiment_logger.info(
        "%s: empirical %s +- %s vs. analytic %s (z=%.2f)",
        check_id,
        mean,
        standard_error,
        analytic.value,
        report.z_score,
    )
    return report


# pylint:disable=too-many-arguments
def verify_clause_density(
    params: ModelParams,
    trials: int,
    master_seed: int = 0,
    parallelism: int = 1,
    settings: Optional[ExperimentSettings] = None,
) -> VerificationReport:
    """
    compares the mean clause count with expected_clauses (the exact variant for the l_inf metric)
    :raises DegenerateParametersError: if fewer than 30 clauses are expected
    """
    analytic = expected_clauses(params, exact=params.metric == Metric.LINF)
    if analytic.value < MIN_EXPECTED_CLAUSES:
        raise DegenerateParametersError(
            f"The density check needs at least {MIN_EXPECTED_CLAUSES} expected clauses", analytic.value
        )
    config = ExperimentConfig(
        model_params=params,
        event=EventKind.CLAUSE_COUNT,
        trials=trials,
        master_seed=master_seed,
        parallelism=parallelism,
    )
    return _report("clause_density", run_trials(config, settings).values.astype(np.float64), analytic, params)


# pylint:disable=too-many-arguments, too-many-locals
def verify_coupling(
    n: int,
    k: int,
    d: int,
    mu: float,
    trials: int,
    master_seed: int = 0,
    metric: Metric = Metric.LINF,
    boundary_mode: BoundaryMode = BoundaryMode.CUBE,
    min_agreement: float = 0.95,
) -> CouplingReport:
    """
    draws `trials` coupled pairs and reports how often the continuous and the grid formula agree.
    The heads count is compared with its closed form; its standard error is the Poisson one, sqrt(mean / trials),
    because most batches see no heads at all.
    """
    if trials < 1:
        raise ValueError(f"At least one trial is needed but got {trials}")
    identical = 0
    heads_total = 0
    collisions = CollisionReport()
    for trial_index in range(trials):
        pair = generate_discrete_coupled(
            n, k, d, mu, rng=trial_seed(master_seed, trial_index), metric=metric, boundary_mode=boundary_mode
        )
        identical += int(pair.identical)
        heads_total += pair.heads_count
        collisions = collisions + pair.collision_report
    heads_expected = expected_extra_heads(n, d, mu)
    heads_mean = heads_total / trials
    report = CouplingReport(
        trials=trials,
        agreement_rate=identical / trials,
        collision_report=collisions,
        heads_mean=heads_mean,
        heads_expected=heads_expected,
        heads_z_score=z_score(heads_mean, math.sqrt(heads_expected / trials), heads_expected),
        min_agreement=min_agreement,
    )
    experiment_logger.info("Coupling agreement %s over %i trials: %s", report.agreement_rate, trials, collisions)
    return report


def simulate_literal_pattern(
    literal_count: int, clauses: Sequence[Tuple[int, int]], mu: float, n: int, d: int, trials: int, stream: RngStream
) -> np.ndarray:
    """
    0/1 per trial: whether all given 2-clauses appear in F_2(n, mu) on the torus.
    Only the points of the involved literals are simulated; a clause (a, b) appears iff some point of a and some point
    of b are within l_inf distance n^(-1/d).
    """
    r = mu_radius(n, d)
    present_per_chunk = []
    for chunk_start in range(0, trials, PATTERN_CHUNK_SIZE):
        size = min(PATTERN_CHUNK_SIZE, trials - chunk_start)
        counts = stream.poisson(mu, size=(size, literal_count))
        width = max(int(counts.max(initial=0)), 1)
        positions = stream.random(size=(size, literal_count, width, d))
        valid = np.arange(width) < counts[..., np.newaxis]
        present = np.ones(size, dtype=bool)
        for first, second in clauses:
            gaps = np.abs(positions[:, first, :, np.newaxis, :] - positions[:, second, np.newaxis, :, :])
            close = np.minimum(gaps, 1 - gaps).max(axis=-1) <= r
            close &= valid[:, first, :, np.newaxis] & valid[:, second, np.newaxis, :]
            present &= close.any(axis=(1, 2))
        present_per_chunk.append(present)
    return np.concatenate(present_per_chunk).astype(np.float64)


def _pattern_analytic(check_id: str, mu: float, d: int, n: int) -> AnalyticValue:
    if check_id == "wedge":
        return wedge_prob(mu, d, n)
    path, star = triple_probs(mu, d, n)
    return path if check_id == "triple_path" else star


def _snake_length(formula_id: str) -> int:
    _, _, length = formula_id.partition(":")
    return int(length) if length else 3


def verify_moment(
    formula_id: str,
    params: ModelParams,
    trials: int,
    master_seed: int = 0,
    settings: Optional[ExperimentSettings] = None,
) -> VerificationReport:
    """
    checks one of the moment formulas by simulation.
    :param formula_id: "poisson_moment:<r>" (mu = params.param), "wedge", "triple_path", "triple_star" (F_2(n, mu) on
        the torus) or "snake" / "snake:<s>" (F_2(n, gamma), compared with the exact snake expectation)
    :raises UnsupportedModelError: for unknown formula ids or unsuitable models
    """
    if trials < 2:
        raise ValueError(f"A moment check needs at least 2 trials but got {trials}")
    stream = stream_from_seed(master_seed)
    if formula_id.startswith("poisson_moment:"):
        order = int(formula_id.partition(":")[2])
        analytic = poisson_moment(params.param, order)
        samples = stream.poisson(params.param, size=trials).astype(np.float64) ** order
        return _report(formula_id, samples, analytic, params)
    if formula_id in LITERAL_PATTERNS:
        if params.model != ModelKind.MU:
            raise UnsupportedModelError(formula_id, params.model)
        literal_count, clauses = LITERAL_PATTERNS[formula_id]
        samples = simulate_literal_pattern(literal_count, clauses, params.param, params.n, params.d, trials, stream)
        return _report(formula_id, samples, _pattern_analytic(formula_id, params.param, params.d, params.n), params)
    if formula_id == "snake" or formula_id.startswith("snake:"):
        s = _snake_length(formula_id)
        analytic = expected_snakes(params, s, exact=True)
        config = ExperimentConfig(
            model_params=params, event=EventKind.SNAKE_COUNT, trials=trials, master_seed=master_seed, event_argument=s
        )
        return _report(formula_id, run_trials(config, settings).values.astype(np.float64), analytic, params)
    raise UnsupportedModelError(formula_id, params.model)
