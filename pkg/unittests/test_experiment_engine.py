""" Tests for the trial engine, the event evaluators, the settings and the sweeps """

import inject
import pytest

from geosat.analytics.geometric import connectivity_radius
from geosat.experiments import TrialBudgetExceededError
from geosat.experiments.engine import check_budget, run_single_trial, run_trials
from geosat.experiments.events import EventEvaluator
from geosat.experiments.rng import resolve_stream, trial_seed, trial_stream
from geosat.experiments.settings_provider import configure_settings, get_settings
from geosat.experiments.sweep import check_monotone, curve_point, sweep
from geosat.generators.factory import generate_from_params
from geosat.models.analytic_values import ModelParams
from geosat.models.enums import EventKind, ModelKind, SolverEngine
from geosat.models.experiment_results import Curve, CurvePoint, ExperimentConfig
from geosat.models.formula import Formula, Hypergraph
from geosat.models.settings import ExperimentSettings
from geosat.solvers import engine as solver_engine

MU_2SAT = ModelParams(model=ModelKind.MU, n=100, k=2, d=1, param=0.4)


class TestRandomStreams:
    """
    Tests for the derivation of per trial streams
    """

    def test_trial_seeds_differ(self):
        seeds = {trial_seed(0, trial) for trial in range(1000)}
        assert len(seeds) == 1000
        assert trial_seed(1, 0) != trial_seed(0, 0)

    def test_trial_stream_is_reproducible(self):
        assert trial_stream(5, 3).random() == trial_stream(5, 3).random()

    def test_resolve_stream(self, rng):
        assert resolve_stream(rng) == (rng, None)
        assert resolve_stream(7)[1] == 7
        with pytest.raises(ValueError):
            resolve_stream(-1)
        with pytest.raises(TypeError):
            resolve_stream(1.5)


class TestEventEvaluator:
    """
    Tests for the evaluation of events on drawn objects
    """

    def test_every_event_has_a_method(self):
        evaluator = EventEvaluator()
        for event in EventKind:
            assert evaluator.get_evaluation_method(event) is not None

    def test_sat_and_unsat(self):
        evaluator = EventEvaluator()
        unsatisfiable = Formula.from_clauses(1, 2, [[1, 1], [-1, -1]])
        assert evaluator.evaluate(EventKind.SAT, unsatisfiable) == 0
        assert evaluator.evaluate(EventKind.UNSAT, unsatisfiable) == 1

    def test_pattern_events(self):
        evaluator = EventEvaluator()
        formula = Formula.from_clauses(1, 2, [[1, 1], [-1, -1]])
        assert evaluator.evaluate(EventKind.HAS_BICYCLE, formula, 1) == 1
        assert evaluator.evaluate(EventKind.SNAKE_COUNT, formula, 1) == 2
        assert evaluator.evaluate(EventKind.CLAUSE_COUNT, formula) == 2

    def test_events_of_hypergraphs(self):
        evaluator = EventEvaluator()
        graph = Hypergraph(vertex_count=3, k=2, edges=[[0, 1], [1, 2]])
        assert evaluator.evaluate(EventKind.CONNECTED, graph) == 1
        assert evaluator.evaluate(EventKind.CLAUSE_COUNT, graph) == 2
        with pytest.raises(ValueError):
            evaluator.evaluate(EventKind.SAT, graph)

    def test_connectivity_of_a_formula(self):
        with pytest.raises(ValueError):
            EventEvaluator().evaluate(EventKind.CONNECTED, Formula.from_clauses(1, 2, []))

    def test_missing_event_argument(self):
        with pytest.raises(ValueError):
            EventEvaluator().evaluate(EventKind.HAS_BICYCLE, Formula.from_clauses(1, 2, []))

    def test_the_configured_engine_is_used(self, mocker):
        solve_spy = mocker.spy(solver_engine, "solve_ksat_complete")
        evaluator = EventEvaluator(engine=SolverEngine.COMPLETE, var_limit=5)
        assert evaluator.evaluate(EventKind.SAT, Formula.from_clauses(2, 2, [[1, 2]])) == 1
        solve_spy.assert_called_once()
        assert solve_spy.call_args.args[1] == 5


class TestSettings:
    """
    Tests for the injected experiment settings
    """

    def test_injected_settings_are_used(self, injected_settings: ExperimentSettings):
        assert get_settings() == injected_settings

    def test_environment_is_the_fallback(self, monkeypatch):
        inject.clear()
        monkeypatch.setenv("GEOSAT_BUDGET", "5000")
        assert get_settings().trial_budget == 5000

    def test_configure_twice(self, injected_settings: ExperimentSettings):
        configure_settings(ExperimentSettings(trial_budget=10))
        assert get_settings() == injected_settings
        configure_settings(ExperimentSettings(trial_budget=10), overwrite=True)
        assert get_settings().trial_budget == 10


class TestTrialEngine:
    """
    Tests for running batches of trials
    """

    def test_single_trial_is_reproducible(self):
        config = ExperimentConfig(model_params=MU_2SAT, event=EventKind.CLAUSE_COUNT, trials=3, master_seed=9)
        outcome = run_single_trial(config, 2, 40)
        assert outcome == run_single_trial(config, 2, 40)
        assert outcome.seed == trial_seed(9, 2)
        _, formula = generate_from_params(MU_2SAT, outcome.seed)
        assert outcome.outcome == formula.clause_count

    def test_parallelism_does_not_change_the_batch(self, injected_settings: ExperimentSettings):
        serial = ExperimentConfig(model_params=MU_2SAT, event=EventKind.SAT, trials=40, master_seed=3)
        parallel = ExperimentConfig(
            model_params=MU_2SAT, event=EventKind.SAT, trials=40, master_seed=3, parallelism=2
        )
        assert run_trials(serial).outcomes == run_trials(parallel).outcomes

    def test_budget(self):
        config = ExperimentConfig(model_params=MU_2SAT, event=EventKind.SAT, trials=1000)
        with pytest.raises(TrialBudgetExceededError) as exception_info:
            run_trials(config, ExperimentSettings(trial_budget=10**4))
        assert exception_info.value.requested == 10**5
        assert exception_info.value.budget == 10**4
        check_budget(config, ExperimentSettings(trial_budget=10**5))

    def test_every_trial_is_evaluated(self, injected_settings: ExperimentSettings, mocker):
        solve_spy = mocker.spy(solver_engine, "solve_2sat")
        config = ExperimentConfig(model_params=MU_2SAT, event=EventKind.SAT, trials=25)
        batch = run_trials(config)
        assert solve_spy.call_count == 25
        assert [outcome.trial for outcome in batch.outcomes] == list(range(25))

    def test_pigeonhole_configuration_is_never_satisfiable(self, injected_settings: ExperimentSettings):
        params = ModelParams(model=ModelKind.GAMMA, n=14, k=3, d=1, param=2.5)
        batch = run_trials(ExperimentConfig(model_params=params, event=EventKind.SAT, trials=100))
        assert batch.successes == 0

    def test_sparse_formulas_are_satisfiable(self, injected_settings: ExperimentSettings):
        params = ModelParams(model=ModelKind.MU, n=1000, k=2, d=1, param=0.01)
        batch = run_trials(ExperimentConfig(model_params=params, event=EventKind.SAT, trials=100))
        assert batch.successes == 100

    def test_connectivity_of_random_geometric_graphs(self, injected_settings: ExperimentSettings):
        params = ModelParams(model=ModelKind.RGG_FIXED, n=200, k=2, d=2, param=0.5)
        batch = run_trials(ExperimentConfig(model_params=params, event=EventKind.CONNECTED, trials=10))
        assert batch.successes == 10

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "factor, min_successes, max_successes",
        [
            pytest.param(2.0, 95, 100, id="twice the connectivity radius"),
            pytest.param(0.5, 0, 5, id="half the connectivity radius"),
        ],
    )
    def test_sharp_connectivity_threshold(
        self, factor: float, min_successes: int, max_successes: int, injected_settings: ExperimentSettings
    ):
        n = 10**4
        params = ModelParams(model=ModelKind.RGG_FIXED, n=n, k=2, d=2, param=factor * connectivity_radius(n, 2).value)
        batch = run_trials(ExperimentConfig(model_params=params, event=EventKind.CONNECTED, trials=100, master_seed=8))
        assert min_successes <= batch.successes <= max_successes


class TestSweeps:
    """
    Tests for parameter sweeps and the monotonicity check
    """

    def test_sweep_of_a_decreasing_event(self, injected_settings: ExperimentSettings):
        config = ExperimentConfig(model_params=MU_2SAT, event=EventKind.SAT, trials=60, master_seed=1)
        curve = sweep(config, [0.1, 0.5, 1.5])
        assert curve.n == 100
        assert curve.event == EventKind.SAT
        assert [point.trials for point in curve.points] == [60, 60, 60]
        assert curve.points[0].p_hat > curve.points[-1].p_hat
        assert check_monotone(curve, decreasing=True) == []

    def test_sweep_of_a_count(self, injected_settings: ExperimentSettings):
        config = ExperimentConfig(model_params=MU_2SAT, event=EventKind.CLAUSE_COUNT, trials=30)
        curve = sweep(config, [0.5, 1.0])
        assert curve.points[0].ci_low <= curve.points[0].p_hat <= curve.points[0].ci_high
        assert curve.points[1].p_hat > curve.points[0].p_hat

    @pytest.mark.parametrize(
        "grid",
        [
            pytest.param([], id="empty"),
            pytest.param([0.5, 0.5], id="repeated"),
            pytest.param([0.5, 0.2], id="decreasing"),
        ],
    )
    def test_invalid_grid(self, grid):
        config = ExperimentConfig(model_params=MU_2SAT, event=EventKind.SAT, trials=1)
        with pytest.raises(ValueError):
            sweep(config, grid)

    def test_monotonicity_violations(self):
        curve = Curve(
            n=10,
            event=EventKind.UNSAT,
            points=[
                CurvePoint(param=0.1, p_hat=0.1, ci_low=0.05, ci_high=0.2, trials=100),
                CurvePoint(param=0.2, p_hat=0.5, ci_low=0.4, ci_high=0.6, trials=100),
                CurvePoint(param=0.3, p_hat=0.2, ci_low=0.1, ci_high=0.3, trials=100),
                CurvePoint(param=0.4, p_hat=0.25, ci_low=0.15, ci_high=0.45, trials=100),
            ],
        )
        assert check_monotone(curve, decreasing=False) == [2]
        assert check_monotone(curve, decreasing=True) == [1]

    def test_curve_point_of_a_boolean_event(self, injected_settings: ExperimentSettings):
        batch = run_trials(ExperimentConfig(model_params=MU_2SAT, event=EventKind.SAT, trials=20))
        point = curve_point(batch)
        assert point.param == 0.4
        assert point.p_hat == batch.successes / 20
        assert 0 <= point.ci_low <= point.p_hat <= point.ci_high <= 1
