"""
Writes trial batches and sweep curves as CSV and threshold estimates as JSON.
"""

import csv
import json
from pathlib import Path
from typing import TextIO, Union

from geosat.geometry.point_io import format_float
from geosat.models.experiment_results import Curve, ThresholdEstimate, ThresholdEstimateSchema, TrialBatch

TRIALS_HEADER = ["trial", "seed", "param", "event", "outcome", "elapsed_ms"]
CURVE_HEADER = ["param", "p_hat", "ci_lo", "ci_hi", "trials"]


def write_trials_csv(batch: TrialBatch, target: Union[Path, TextIO]) -> None:
    """
    one row per trial: trial,seed,param,event,outcome,elapsed_ms
    """
    if isinstance(target, Path):
        with open(target, "w", encoding="utf-8", newline="") as csv_file:
            write_trials_csv(batch, csv_file)
        return
    writer = csv.writer(target, lineterminator="\n")
    writer.writerow(TRIALS_HEADER)
    for outcome in batch.outcomes:
        writer.writerow(
            [
                outcome.trial,
                outcome.seed,
                format_float(outcome.param),
                str(batch.config.event),
                outcome.outcome,
                format_float(outcome.elapsed_ms),
            ]
        )


def write_curve_csv(curve: Curve, target: Union[Path, TextIO]) -> None:
    """
    one row per grid point: param,p_hat,ci_lo,ci_hi,trials
    """
    if isinstance(target, Path):
        with open(target, "w", encoding="utf-8", newline="") as csv_file:
            write_curve_csv(curve, csv_file)
        return
    writer = csv.writer(target, lineterminator="\n")
    writer.writerow(CURVE_HEADER)
    for point in curve.points:
        writer.writerow(
            [
                format_float(point.param),
                format_float(point.p_hat),
                format_float(point.ci_low),
                format_float(point.ci_high),
                point.trials,
            ]
        )


def threshold_estimate_json(estimate: ThresholdEstimate) -> str:
    """the JSON summary of a threshold search"""
    return json.dumps(ThresholdEstimateSchema().dump(estimate), sort_keys=True)
