"""
Parameter sweeps. All grid points of a sweep share the master seed (common random numbers), which makes the curves of
monotone events smoother than independent seeds would.
"""

from typing import List, Optional, Sequence

from geosat.experiments import experiment_logger
from geosat.experiments.engine import run_trials
from geosat.experiments.statistics import estimate_mean, estimate_probability
from geosat.models.experiment_results import Curve, CurvePoint, ExperimentConfig, TrialBatch
from geosat.models.settings import ExperimentSettings


def curve_point(batch: TrialBatch) -> CurvePoint:
    """
    summarizes a batch: Wilson interval for boolean events, normal interval of the mean for counts
    """
    if batch.config.event.is_boolean():
        p_hat, ci_low, ci_high = estimate_probability(batch)
    else:
        p_hat, ci_low, ci_high = estimate_mean(batch)
    return CurvePoint(
        param=batch.config.model_params.param, p_hat=p_hat, ci_low=ci_low, ci_high=ci_high, trials=len(batch.outcomes)
    )


def sweep(
    config: ExperimentConfig, param_grid: Sequence[float], settings: Optional[ExperimentSettings] = None
) -> Curve:
    """
    runs config once per grid value (replacing the model parameter)
    :raises ValueError: if the grid is empty or not strictly increasing
    """
    grid = [float(param) for param in param_grid]
    if not grid:
        raise ValueError("The parameter grid must not be empty")
    if any(later <= earlier for earlier, later in zip(grid, grid[1:])):
        raise ValueError(f"The parameter grid has to be strictly increasing: {grid}")
    points = [curve_point(run_trials(config.with_param(param), settings)) for param in grid]
    return Curve(n=config.model_params.n, event=config.event, points=points)


def check_monotone(curve: Curve, decreasing: bool) -> List[int]:
    """
    returns the indices i of the points that break monotonicity beyond the overlap of the confidence intervals,
    i.e. where the interval of point i lies entirely on the wrong side of the interval of point i-1
    """
    violations = []
    for index in range(1, len(curve)):
        previous, current = curve.points[index - 1], curve.points[index]
        if decreasing:
            violated = current.ci_low > previous.ci_high
        else:
            violated = current.ci_high < previous.ci_low
        if violated:
            violations.append(index)
            experiment_logger.warning(
                "The curve is not monotone between %s (%s) and %s (%s)",
                previous.param,
                previous.p_hat,
                current.param,
                current.p_hat,
            )
    return violations
