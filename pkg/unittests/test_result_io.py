""" Tests for the CSV and JSON output of experiments """

import csv
import io
import json
from pathlib import Path

from geosat.experiments.result_io import (
    CURVE_HEADER,
    TRIALS_HEADER,
    threshold_estimate_json,
    write_curve_csv,
    write_trials_csv,
)
from geosat.models.analytic_values import ModelParams
from geosat.models.enums import EventKind, ModelKind
from geosat.models.experiment_results import (
    Curve,
    CurvePoint,
    ExperimentConfig,
    ThresholdEstimate,
    ThresholdEstimateSchema,
    TrialBatch,
    TrialOutcome,
)


class TestResultIo:
    """
    Tests for the result files
    """

    def test_trials_csv(self):
        config = ExperimentConfig(
            model_params=ModelParams(model=ModelKind.MU, n=10, k=2, d=1, param=0.25), event=EventKind.SAT, trials=2
        )
        batch = TrialBatch(
            config=config,
            outcomes=[
                TrialOutcome(trial=0, seed=11, param=0.25, outcome=1, elapsed_ms=1.5),
                TrialOutcome(trial=1, seed=12, param=0.25, outcome=0, elapsed_ms=2.0),
            ],
        )
        buffer = io.StringIO()
        write_trials_csv(batch, buffer)
        assert buffer.getvalue().splitlines() == [
            "trial,seed,param,event,outcome,elapsed_ms",
            "0,11,0.25,SAT,1,1.5",
            "1,12,0.25,SAT,0,2.0",
        ]

    def test_curve_csv(self, tmp_path: Path):
        curve = Curve(
            n=100,
            event=EventKind.UNSAT,
            points=[
                CurvePoint(param=0.1, p_hat=0.0, ci_low=0.0, ci_high=0.037, trials=100),
                CurvePoint(param=0.2, p_hat=0.5, ci_low=0.4, ci_high=0.6, trials=100),
            ],
        )
        target = tmp_path / "curve.csv"
        write_curve_csv(curve, target)
        with open(target, "r", encoding="utf-8") as csv_file:
            rows = list(csv.reader(csv_file))
        assert rows[0] == CURVE_HEADER == ["param", "p_hat", "ci_lo", "ci_hi", "trials"]
        assert rows[1:] == [["0.1", "0.0", "0.0", "0.037", "100"], ["0.2", "0.5", "0.4", "0.6", "100"]]

    def test_threshold_json(self):
        estimate = ThresholdEstimate(
            param_at_half=0.5, bracket_low=0.45, bracket_high=0.55, width_10_90=0.2, n=1000, total_trials=3000
        )
        text = threshold_estimate_json(estimate)
        assert list(json.loads(text)) == sorted(json.loads(text))
        assert ThresholdEstimateSchema().loads(text) == estimate

    def test_trials_header(self):
        assert TRIALS_HEADER == ["trial", "seed", "param", "event", "outcome", "elapsed_ms"]
