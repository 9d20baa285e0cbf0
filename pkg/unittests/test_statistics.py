""" Tests for the confidence intervals of Monte Carlo estimates """

import pytest
from scipy import stats

from geosat.experiments.statistics import estimate_mean, estimate_probability, wilson_interval
from geosat.models.analytic_values import ModelParams
from geosat.models.enums import EventKind, ModelKind
from geosat.models.experiment_results import ExperimentConfig, TrialBatch, TrialOutcome


def _batch(event: EventKind, outcomes) -> TrialBatch:
    config = ExperimentConfig(
        model_params=ModelParams(model=ModelKind.GAMMA, n=10, k=2, d=1, param=0.5),
        event=event,
        trials=len(outcomes),
    )
    return TrialBatch(
        config=config,
        outcomes=[
            TrialOutcome(trial=index, seed=index, param=0.5, outcome=outcome) for index, outcome in enumerate(outcomes)
        ],
    )


class TestWilsonInterval:
    """
    Tests for the Wilson score interval
    """

    def test_no_successes(self):
        ci_low, ci_high = wilson_interval(0, 100)
        assert ci_low == pytest.approx(0.0, abs=1e-12)
        assert ci_high == pytest.approx(0.037, abs=5e-4)

    def test_only_successes(self):
        ci_low, ci_high = wilson_interval(100, 100)
        assert ci_low == pytest.approx(0.963, abs=5e-4)
        assert ci_high == pytest.approx(1.0, abs=1e-12)

    def test_symmetric_around_one_half(self):
        ci_low, ci_high = wilson_interval(50, 100)
        assert ci_low + ci_high == pytest.approx(1.0)
        assert ci_low == pytest.approx(0.4038, abs=1e-3)

    def test_higher_confidence_is_wider(self):
        narrow = wilson_interval(30, 100, confidence=0.9)
        wide = wilson_interval(30, 100, confidence=0.99)
        assert wide[0] < narrow[0] < narrow[1] < wide[1]

    @pytest.mark.parametrize("p", [pytest.param(p, id=f"p={p}") for p in (0.1, 0.3, 0.5)])
    def test_coverage(self, p: float):
        trials = 100
        coverage = sum(
            stats.binom.pmf(successes, trials, p)
            for successes in range(trials + 1)
            if wilson_interval(successes, trials)[0] <= p <= wilson_interval(successes, trials)[1]
        )
        assert coverage >= 0.9

    @pytest.mark.parametrize(
        "successes, trials",
        [
            pytest.param(0, 0, id="no trials"),
            pytest.param(-1, 10, id="negative successes"),
            pytest.param(11, 10, id="more successes than trials"),
        ],
    )
    def test_invalid_arguments(self, successes: int, trials: int):
        with pytest.raises(ValueError):
            wilson_interval(successes, trials)


class TestEstimates:
    """
    Tests for the estimates of probabilities and means from trial batches
    """

    def test_probability(self):
        p_hat, ci_low, ci_high = estimate_probability(_batch(EventKind.SAT, [1, 1, 0, 1]))
        assert p_hat == 0.75
        assert (ci_low, ci_high) == wilson_interval(3, 4)

    def test_probability_of_a_count(self):
        with pytest.raises(ValueError):
            estimate_probability(_batch(EventKind.CLAUSE_COUNT, [3, 5]))

    def test_mean(self):
        mean, ci_low, ci_high = estimate_mean(_batch(EventKind.CLAUSE_COUNT, [2, 4, 6, 8]))
        assert mean == 5.0
        # standard error sqrt(20/3) / 2
        assert ci_high - mean == pytest.approx(1.959964 * (20 / 3) ** 0.5 / 2, rel=1e-5)
        assert mean - ci_low == pytest.approx(ci_high - mean)

    def test_mean_of_a_single_trial(self):
        assert estimate_mean(_batch(EventKind.CLAUSE_COUNT, [7])) == (7.0, 7.0, 7.0)
