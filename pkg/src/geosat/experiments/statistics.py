"""
Confidence intervals for Monte Carlo estimates.
"""

import math
from typing import Tuple

from scipy import stats

from geosat.models.experiment_results import TrialBatch

CONFIDENCE_LEVEL = 0.95


def _z_quantile(confidence: float) -> float:
    return float(stats.norm.ppf(0.5 + confidence / 2))


def wilson_interval(successes: int, trials: int, confidence: float = CONFIDENCE_LEVEL) -> Tuple[float, float]:
    """
    the Wilson score interval of a binomial proportion
    """
    if trials < 1:
        raise ValueError(f"At least one trial is needed but got {trials}")
    if not 0 <= successes <= trials:
        raise ValueError(f"The number of successes {successes} is not within 0..{trials}")
    z = _z_quantile(confidence)
    p_hat = successes / trials
    denominator = 1 + z**2 / trials
    center = (p_hat + z**2 / (2 * trials)) / denominator
    half_width = z / denominator * math.sqrt(p_hat * (1 - p_hat) / trials + z**2 / (4 * trials**2))
    return max(0.0, center - half_width), min(1.0, center + half_width)


def estimate_probability(batch: TrialBatch, confidence: float = CONFIDENCE_LEVEL) -> Tuple[float, float, float]:
    """
    (p_hat, ci_low, ci_high) of a boolean event
    :raises ValueError: for count events
    """
    if not batch.config.event.is_boolean():
        raise ValueError(f"The event {batch.config.event} is a count, not a boolean event")
    successes = batch.successes
    trials = len(batch.outcomes)
    ci_low, ci_high = wilson_interval(successes, trials, confidence)
    return successes / trials, ci_low, ci_high


def estimate_mean(batch: TrialBatch, confidence: float = CONFIDENCE_LEVEL) -> Tuple[float, float, float]:
    """
    (mean, ci_low, ci_high) with the normal approximation; works for boolean and count events
    """
    half_width = _z_quantile(confidence) * batch.standard_error
    return batch.mean, batch.mean - half_width, batch.mean + half_width
