""" Tests for the data classes and their (de)serialization """

import json

import numpy as np
import pytest
from marshmallow import Schema

from geosat.models.analytic_values import AnalyticValue, AnalyticValueSchema, ModelParams, ModelParamsSchema
from geosat.models.coupling import CollisionReport, CollisionReportSchema
from geosat.models.enums import (
    BoundaryMode,
    EventKind,
    Metric,
    ModelKind,
    SatStatus,
    Sign,
    SolverEngine,
    ValueKind,
)
from geosat.models.experiment_results import (
    Curve,
    CurvePoint,
    ExperimentConfig,
    ExperimentConfigSchema,
    ThresholdEstimate,
    ThresholdEstimateSchema,
    TrialBatch,
    TrialOutcome,
    VerificationReport,
    VerificationReportSchema,
    z_score,
)
from geosat.models.formula import (
    NO_PROVENANCE,
    Clause,
    Formula,
    GeneratorRecord,
    GeneratorRecordSchema,
    Hypergraph,
    LiteralId,
    negate_labels,
)
from geosat.models.sat_results import Bicycle, SatResult, Snake
from geosat.models.settings import DEFAULT_TRIAL_BUDGET, ExperimentSettings


def _roundtrip(obj, schema: Schema, expected_json_dict: dict):
    """
    dumps the object, compares the JSON with the expectation and loads it again
    """
    json_string = schema.dumps(obj)
    assert json.loads(json_string) == expected_json_dict
    deserialized = schema.loads(json_string)
    assert deserialized == obj
    return deserialized


class TestLiterals:
    """
    Tests for the labels of literals
    """

    @pytest.mark.parametrize(
        "literal, expected_label, expected_dimacs",
        [
            pytest.param(LiteralId(variable=1), 1, 1, id="x1"),
            pytest.param(LiteralId(variable=1, sign=Sign.NEGATIVE), 2, -1, id="not x1"),
            pytest.param(LiteralId(variable=7), 13, 7, id="x7"),
            pytest.param(LiteralId(variable=7, sign=Sign.NEGATIVE), 14, -7, id="not x7"),
        ],
    )
    def test_labels(self, literal: LiteralId, expected_label: int, expected_dimacs: int):
        assert literal.label == expected_label
        assert literal.dimacs == expected_dimacs
        assert LiteralId.from_label(expected_label) == literal
        assert LiteralId.from_dimacs(expected_dimacs) == literal
        assert literal.negation().negation() == literal
        assert literal.negation().label == int(negate_labels(expected_label))

    def test_zero_is_no_literal(self):
        with pytest.raises(ValueError):
            LiteralId.from_dimacs(0)

    def test_clause_is_sorted_and_detects_tautologies(self):
        clause = Clause(literals=[LiteralId.from_dimacs(-2), LiteralId.from_dimacs(1)])
        assert clause.labels == (1, 4)
        assert not clause.is_tautology()
        assert Clause(literals=[LiteralId.from_dimacs(3), LiteralId.from_dimacs(-3)]).is_tautology()


class TestFormula:
    """
    Tests for formulas and hypergraphs
    """

    def test_from_clauses(self):
        formula = Formula.from_clauses(3, 2, [[2, -1], [3, 1], [2, -1]])
        np.testing.assert_array_equal(formula.literal_labels, [[2, 3], [1, 5], [2, 3]])
        assert formula.clause_count == 3
        assert np.all(formula.provenance == NO_PROVENANCE)
        np.testing.assert_array_equal(formula.dimacs_rows(), [[-1, 2], [1, 3], [-1, 2]])
        np.testing.assert_array_equal(formula.unique_label_rows(), [[1, 5], [2, 3]])
        assert formula.clauses[0].literals == (LiteralId.from_dimacs(-1), LiteralId.from_dimacs(2))

    def test_provenance_is_permuted_along(self):
        formula = Formula.from_label_rows(2, 2, [[4, 1]], provenance=[[10, 20]])
        np.testing.assert_array_equal(formula.literal_labels, [[1, 4]])
        np.testing.assert_array_equal(formula.provenance, [[20, 10]])

    def test_same_clauses_ignore_order_and_provenance(self):
        first = Formula.from_label_rows(2, 2, [[1, 3], [2, 4]], provenance=[[0, 1], [2, 3]])
        second = Formula.from_label_rows(2, 2, [[4, 2], [3, 1]])
        assert first.has_same_clauses(second)
        assert not first.has_same_clauses(Formula.from_label_rows(2, 2, [[1, 3]]))
        assert first != second

    def test_empty_formula(self):
        formula = Formula.from_clauses(4, 3, [])
        assert formula.clause_count == 0
        assert formula.literal_labels.shape == (0, 3)

    @pytest.mark.parametrize(
        "n_vars, k, rows",
        [
            pytest.param(1, 2, [[1, 3]], id="unknown variable"),
            pytest.param(2, 2, [[0, 1]], id="label zero"),
            pytest.param(2, 1, [[1]], id="width one"),
        ],
    )
    def test_invalid_formulas(self, n_vars: int, k: int, rows):
        with pytest.raises(ValueError):
            Formula.from_label_rows(n_vars, k, rows)

    def test_hypergraph_edges_refer_to_vertices(self):
        with pytest.raises(ValueError):
            Hypergraph(vertex_count=2, k=2, edges=[[0, 2]])
        assert Hypergraph(vertex_count=3, k=2, edges=[]).edge_count == 0


class TestSatResults:
    """
    Tests for verdicts and the combinatorial patterns
    """

    def test_sat_needs_witness(self):
        with pytest.raises(ValueError):
            SatResult(status=SatStatus.SAT)
        assert SatResult(status=SatStatus.SAT, witness=[1, 0]).witness == (True, False)

    def test_unsat_without_witness(self):
        with pytest.raises(ValueError):
            SatResult(status=SatStatus.UNSAT, witness=[True])
        assert not SatResult(status=SatStatus.UNSAT).is_satisfiable

    def test_snake_clauses(self):
        w = [LiteralId.from_dimacs(1), LiteralId.from_dimacs(2), LiteralId.from_dimacs(3)]
        snake = Snake(w=w)
        assert snake.middle == LiteralId.from_dimacs(2)
        assert [clause.labels for clause in snake.clauses] == [(1, 3), (2, 3), (4, 5), (4, 6)]

    def test_snake_has_odd_length(self):
        with pytest.raises(ValueError):
            Snake(w=[LiteralId.from_dimacs(1), LiteralId.from_dimacs(2)])

    def test_bicycle(self):
        w = [LiteralId.from_dimacs(1), LiteralId.from_dimacs(-2)]
        bicycle = Bicycle(w=w, u=LiteralId.from_dimacs(2), v=LiteralId.from_dimacs(-1))
        assert bicycle.length == 2
        assert [clause.labels for clause in bicycle.clauses] == [(1, 3), (2, 4), (2, 3)]
        with pytest.raises(ValueError):
            Bicycle(w=w, u=LiteralId.from_dimacs(5), v=LiteralId.from_dimacs(1))
        with pytest.raises(ValueError):
            Bicycle(w=[LiteralId.from_dimacs(1), LiteralId.from_dimacs(-1)], u=w[0], v=w[0])


class TestParameters:
    """
    Tests for the model parameters, the settings and the experiment configuration
    """

    @pytest.mark.parametrize(
        "model, param, is_valid",
        [
            pytest.param(ModelKind.MU, 0.0, True, id="mu may be zero"),
            pytest.param(ModelKind.MU, -0.1, False, id="mu must not be negative"),
            pytest.param(ModelKind.GAMMA, 0.0, False, id="gamma has to be positive"),
            pytest.param(ModelKind.RGG_FIXED, 0.2, True, id="radius"),
        ],
    )
    def test_param_validation(self, model: ModelKind, param: float, is_valid: bool):
        if is_valid:
            assert ModelParams(model=model, n=10, k=2, d=1, param=param).param == param
        else:
            with pytest.raises(ValueError):
                ModelParams(model=model, n=10, k=2, d=1, param=param)

    def test_with_param_and_with_n(self):
        params = ModelParams(model=ModelKind.GAMMA, n=10, k=2, d=1, param=0.2)
        assert params.with_param(0.3).param == 0.3
        assert params.with_n(20).n == 20
        assert params.param == 0.2

    def test_formula_models(self):
        assert ModelKind.TILDE.is_formula_model()
        assert not ModelKind.RGG_FIXED.is_formula_model()
        assert EventKind.HAS_BICYCLE.is_boolean()
        assert not EventKind.SNAKE_COUNT.is_boolean()

    @pytest.mark.parametrize(
        "environment, expected_budget",
        [
            pytest.param({}, DEFAULT_TRIAL_BUDGET, id="default"),
            pytest.param({"GEOSAT_BUDGET": "1e6"}, 10**6, id="scientific notation"),
            pytest.param({"GEOSAT_BUDGET": " "}, DEFAULT_TRIAL_BUDGET, id="blank"),
        ],
    )
    def test_settings_from_environment(self, environment, expected_budget: int):
        assert ExperimentSettings.from_environment(environment).trial_budget == expected_budget

    def test_malformed_budget(self):
        with pytest.raises(ValueError):
            ExperimentSettings.from_environment({"GEOSAT_BUDGET": "plenty"})

    def test_seed_range(self):
        params = ModelParams(model=ModelKind.MU, n=10, k=2, d=1, param=0.5)
        with pytest.raises(ValueError):
            ExperimentConfig(model_params=params, event=EventKind.SAT, trials=1, master_seed=-1)
        with pytest.raises(ValueError):
            ExperimentConfig(model_params=params, event=EventKind.SAT, trials=1, master_seed=2**64)

    def test_trial_batch_statistics(self):
        config = ExperimentConfig(
            model_params=ModelParams(model=ModelKind.MU, n=10, k=2, d=1, param=0.5),
            event=EventKind.CLAUSE_COUNT,
            trials=4,
        )
        outcomes = [
            TrialOutcome(trial=index, seed=index, param=0.5, outcome=value) for index, value in enumerate([1, 3, 3, 5])
        ]
        batch = TrialBatch(config=config, outcomes=outcomes)
        assert batch.mean == 3.0
        assert batch.standard_error == pytest.approx(np.std([1, 3, 3, 5], ddof=1) / 2)
        with pytest.raises(ValueError):
            TrialBatch(config=config, outcomes=outcomes[:3])
        with pytest.raises(ValueError):
            TrialBatch(config=config, outcomes=list(reversed(outcomes)))

    def test_runtime_is_not_compared(self):
        assert TrialOutcome(trial=0, seed=1, param=0.1, outcome=1, elapsed_ms=3.0) == TrialOutcome(
            trial=0, seed=1, param=0.1, outcome=1, elapsed_ms=7.0
        )

    def test_curve_grid_is_increasing(self):
        point = CurvePoint(param=0.1, p_hat=0.5, ci_low=0.4, ci_high=0.6, trials=100)
        with pytest.raises(ValueError):
            Curve(n=10, event=EventKind.SAT, points=[point, point])

    def test_threshold_estimate_within_bracket(self):
        with pytest.raises(ValueError):
            ThresholdEstimate(param_at_half=0.7, bracket_low=0.4, bracket_high=0.6, width_10_90=0.1, n=10)

    @pytest.mark.parametrize(
        "empirical, standard_error, analytic, expected",
        [
            pytest.param(1.0, 0.5, 0.0, 2.0, id="two sigma"),
            pytest.param(1.0, 0.0, 1.0, 0.0, id="exact match"),
            pytest.param(1.0, 0.0, 2.0, float("inf"), id="no spread"),
        ],
    )
    def test_z_score(self, empirical: float, standard_error: float, analytic: float, expected: float):
        assert z_score(empirical, standard_error, analytic) == expected


class TestSerialization:
    """
    Tests that the results can be written as JSON and read back
    """

    def test_model_params(self):
        params = ModelParams(
            model=ModelKind.RGG_POISSON, n=100, k=2, d=2, param=1.0, boundary_mode=BoundaryMode.TORUS, radius=0.05
        )
        _roundtrip(
            params,
            ModelParamsSchema(),
            {
                "model": "RGG_POISSON",
                "n": 100,
                "k": 2,
                "d": 2,
                "param": 1.0,
                "metric": "LINF",
                "boundary_mode": "TORUS",
                "radius": 0.05,
            },
        )

    def test_generator_record(self):
        record = GeneratorRecord(model=ModelKind.MU, n=1000, k=2, d=1, param=0.5, seed=7)
        _roundtrip(
            record,
            GeneratorRecordSchema(),
            {
                "model": "MU",
                "n": 1000,
                "k": 2,
                "d": 1,
                "param": 0.5,
                "metric": "LINF",
                "boundary": "CUBE",
                "seed": 7,
                "radius": None,
            },
        )
        assert record.to_model_params() == ModelParams(model=ModelKind.MU, n=1000, k=2, d=1, param=0.5)

    def test_analytic_value(self):
        _roundtrip(
            AnalyticValue(value=0.25, kind=ValueKind.EXACT, formula_id="threshold_2sat"),
            AnalyticValueSchema(),
            {"value": 0.25, "kind": "EXACT", "formula_id": "threshold_2sat"},
        )

    def test_experiment_config_uses_the_engine_value(self):
        config = ExperimentConfig(
            model_params=ModelParams(model=ModelKind.GAMMA, n=10, k=3, d=1, param=1.0),
            event=EventKind.UNSAT,
            trials=5,
            engine=SolverEngine.COMPLETE,
        )
        dumped = ExperimentConfigSchema().dump(config)
        assert dumped["engine"] == "complete"
        assert dumped["event"] == "UNSAT"
        assert ExperimentConfigSchema().load(dumped) == config

    def test_threshold_estimate(self):
        estimate = ThresholdEstimate(
            param_at_half=0.5, bracket_low=0.45, bracket_high=0.55, width_10_90=0.1, n=1000, total_trials=2200
        )
        _roundtrip(
            estimate,
            ThresholdEstimateSchema(),
            {
                "param_at_half": 0.5,
                "bracket_low": 0.45,
                "bracket_high": 0.55,
                "width_10_90": 0.1,
                "n": 1000,
                "target": 0.5,
                "total_trials": 2200,
            },
        )

    def test_verification_report_dumps_the_verdict(self):
        report = VerificationReport(
            check_id="poisson_moment:2",
            trials=10,
            empirical_mean=2.1,
            standard_error=0.1,
            analytic=AnalyticValue(value=2.0, kind=ValueKind.EXACT, formula_id="poisson_moment:2"),
            z_score=1.0,
        )
        dumped = VerificationReportSchema().dump(report)
        assert dumped["passed"] is True
        assert VerificationReportSchema().load(dumped) == report

    def test_collision_reports_add_up(self):
        total = CollisionReport(extra_heads=1) + CollisionReport(same_cell_duplicates=2, boundary_flip_pairs=3)
        assert not total.is_clean
        assert CollisionReport().is_clean
        _roundtrip(
            total,
            CollisionReportSchema(),
            {"extra_heads": 1, "same_cell_duplicates": 2, "boundary_flip_pairs": 3},
        )

    def test_enum_members_print_as_their_value(self):
        assert f"{Metric.LINF}" == "LINF"
        assert str(SolverEngine.TWO_SAT) == "2sat"
