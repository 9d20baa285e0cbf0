"""
Locates the parameter at which the probability of a monotone event crosses a target (usually 1/2).

The search bisects on estimated probabilities. Every estimate starts with initial_trials and doubles them (up to
max_trials) as long as the Wilson interval still contains the target. Afterwards a sweep over the initial interval and
all estimates are fitted with a logistic curve, which yields the 10%-90% width of the transition.
"""

import math
import warnings
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy.optimize import OptimizeWarning, curve_fit
from scipy.special import expit

from geosat.experiments import NonBracketingIntervalError, experiment_logger
from geosat.experiments.engine import run_trials
from geosat.experiments.statistics import wilson_interval
from geosat.models.experiment_results import ExperimentConfig, ThresholdEstimate
from geosat.models.settings import ExperimentSettings

#: (param, trials) -> number of trials in which the event happened
Sampler = Callable[[float, int], int]

MAX_BISECTION_STEPS = 60
LOGIT_90 = math.log(9)  #: logit(0.9) = -logit(0.1)


def _logistic(x: np.ndarray, center: float, scale: float) -> np.ndarray:
    return expit((x - center) / scale)


class _ObservedSampler:
    """
    wraps a sampler and remembers every observation
    """

    def __init__(self, sampler: Sampler, target: float, initial_trials: int, max_trials: int):
        self.sampler = sampler
        self.target = target
        self.initial_trials = initial_trials
        self.max_trials = max_trials
        self.observations: List[Tuple[float, int, int]] = []

    @property
    def total_trials(self) -> int:
        """all trials spent so far"""
        return sum(trials for _, _, trials in self.observations)

    def estimate(self, param: float, trials: int) -> float:
        """p_hat at param with a fixed number of trials"""
        successes = self.sampler(param, trials)
        self.observations.append((param, successes, trials))
        return successes / trials

    def escalating_estimate(self, param: float) -> float:
        """p_hat at param; the trials are doubled while the confidence interval contains the target"""
        trials = self.initial_trials
        while True:
            p_hat = self.estimate(param, trials)
            ci_low, ci_high = wilson_interval(round(p_hat * trials), trials)
            if not ci_low <= self.target <= ci_high or trials >= self.max_trials:
                return p_hat
            trials = min(2 * trials, self.max_trials)


def _fit_logistic(observations: List[Tuple[float, int, int]], start_center: float, start_scale: float):
    params = np.array([param for param, _, _ in observations])
    trials = np.array([count for _, _, count in observations], dtype=np.float64)
    p_hat = np.array([successes for _, successes, _ in observations]) / trials
    sigma = np.sqrt((p_hat * (1 - p_hat) + 1 / trials) / trials)
    with warnings.catch_warnings():
        warnings.simplefilter("error", OptimizeWarning)
        fitted, _ = curve_fit(_logistic, params, p_hat, p0=[start_center, start_scale], sigma=sigma, maxfev=10000)
    center, scale = float(fitted[0]), float(fitted[1])
    if not (math.isfinite(center) and math.isfinite(scale)) or scale == 0:
        raise RuntimeError(f"The logistic fit did not converge (center={center}, scale={scale})")
    return center, scale


def _empirical_width(grid: np.ndarray, p_hat: np.ndarray, increasing: bool) -> float:
    """the 10%-90% width of the monotone envelope of a sweep"""
    if not increasing:
        grid, p_hat = grid[::-1], p_hat[::-1]
    envelope = np.maximum.accumulate(p_hat)
    return float(abs(np.interp(0.9, envelope, grid) - np.interp(0.1, envelope, grid)))


# pylint:disable=too-many-arguments, too-many-locals
def bisect_threshold(
    sampler: Sampler,
    low: float,
    high: float,
    target: float = 0.5,
    rel_tol: float = 0.05,
    initial_trials: int = 100,
    max_trials: int = 10_000,
    sweep_points: int = 11,
    n: int = 0,
) -> ThresholdEstimate:
    """
    finds the crossing of the target between low and high
    :param sampler: runs the given number of trials at a parameter and returns the number of successes
    :param rel_tol: the bisection stops once the bracket is narrower than rel_tol times its midpoint
    :param n: only recorded in the estimate
    :raises NonBracketingIntervalError: if the estimates at low and high lie on the same side of the target
    """
    if rel_tol < 0.01:
        raise ValueError(f"rel_tol has to be >= 0.01 but was {rel_tol}")
    if not 0 < low < high:
        raise ValueError(f"Expected 0 < low < high but got low={low} and high={high}")
    if not 0 < target < 1:
        raise ValueError(f"The target has to be a probability in (0, 1) but was {target}")
    if not 1 <= initial_trials <= max_trials:
        raise ValueError(f"Expected 1 <= initial_trials <= max_trials but got {initial_trials} and {max_trials}")
    observed = _ObservedSampler(sampler, target, initial_trials, max_trials)
    p_low = observed.escalating_estimate(low)
    p_high = observed.escalating_estimate(high)
    if (p_low - target) * (p_high - target) > 0:
        raise NonBracketingIntervalError(low, high, p_low, p_high, target)
    increasing = p_high >= p_low
    bracket_low, bracket_high = low, high
    for _ in range(MAX_BISECTION_STEPS):
        if bracket_high - bracket_low <= rel_tol * (bracket_low + bracket_high) / 2:
            break
        middle = (bracket_low + bracket_high) / 2
        if (observed.escalating_estimate(middle) < target) == increasing:
            bracket_low = middle
        else:
            bracket_high = middle
    param_at_half = (bracket_low + bracket_high) / 2

    grid = np.linspace(low, high, sweep_points)
    sweep_estimates = np.array([observed.estimate(float(param), initial_trials) for param in grid])
    try:
        scale_sign = 1 if increasing else -1
        center, scale = _fit_logistic(observed.observations, param_at_half, scale_sign * (high - low) / 20)
        crossing = min(max(center + scale * math.log(target / (1 - target)), low), high)
        width = 2 * LOGIT_90 * abs(scale)
        bracket_low, bracket_high = min(bracket_low, crossing), max(bracket_high, crossing)
    except (RuntimeError, OptimizeWarning, ValueError) as fit_error:
        experiment_logger.warning("Falling back to the empirical width, the logistic fit failed: %s", fit_error)
        width = _empirical_width(grid, sweep_estimates, increasing)
    experiment_logger.info(
        "The event probability crosses %s at %s (bracket [%s, %s], width %s, %i trials)",
        target,
        param_at_half,
        bracket_low,
        bracket_high,
        width,
        observed.total_trials,
    )
    return ThresholdEstimate(
        param_at_half=param_at_half,
        bracket_low=bracket_low,
        bracket_high=bracket_high,
        width_10_90=width,
        n=n,
        target=target,
        total_trials=observed.total_trials,
    )


# pylint:disable=too-many-arguments
def find_threshold(
    config: ExperimentConfig,
    low: float,
    high: float,
    target: float = 0.5,
    rel_tol: float = 0.05,
    initial_trials: int = 100,
    max_trials: int = 10_000,
    sweep_points: int = 11,
    settings: Optional[ExperimentSettings] = None,
) -> ThresholdEstimate:
    """
    locates the threshold of a boolean event of config's model; the model parameter is searched within [low, high]
    and config.trials is replaced by the escalating trial counts
    :raises NonBracketingIntervalError: if the estimates at low and high lie on the same side of the target
    """
    if not config.event.is_boolean():
        raise ValueError(f"Thresholds are defined for boolean events but got {config.event}")

    def sampler(param: float, trials: int) -> int:
        return run_trials(config.with_param(param).with_trials(trials), settings).successes

    return bisect_threshold(
        sampler,
        low,
        high,
        target=target,
        rel_tol=rel_tol,
        initial_trials=initial_trials,
        max_trials=max_trials,
        sweep_points=sweep_points,
        n=config.model_params.n,
    )
