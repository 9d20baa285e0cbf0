"""
This module contains the configuration of a Monte Carlo experiment and the classes for its results:
the raw per trial outcomes, the curves of a parameter sweep, threshold estimates and verification reports.
"""

# pylint: disable=too-few-public-methods, no-member, unused-argument
import math
from typing import Optional, Tuple

import attrs
import numpy as np
from marshmallow import EXCLUDE, Schema, fields, post_load
from marshmallow_enum import EnumField  # type:ignore[import-untyped]

from geosat.models.analytic_values import AnalyticValue, AnalyticValueSchema, ModelParams, ModelParamsSchema
from geosat.models.coupling import CollisionReport, CollisionReportSchema
from geosat.models.enums import EventKind, SolverEngine

MAX_SEED = 2**64 - 1


@attrs.frozen(kw_only=True)
class ExperimentConfig:
    """
    Describes a batch of independent trials. Trial i draws its random object from a substream that only depends on
    (master_seed, i), so the batch does not depend on the parallelism.
    """

    model_params: ModelParams = attrs.field(validator=attrs.validators.instance_of(ModelParams))
    event: EventKind = attrs.field(validator=attrs.validators.instance_of(EventKind))
    trials: int = attrs.field(validator=[attrs.validators.instance_of(int), attrs.validators.ge(1)])
    master_seed: int = attrs.field(
        default=0,
        validator=[attrs.validators.instance_of(int), attrs.validators.ge(0), attrs.validators.le(MAX_SEED)],
    )
    parallelism: int = attrs.field(default=1, validator=[attrs.validators.instance_of(int), attrs.validators.ge(1)])
    #: L_max for HAS_BICYCLE, the snake length s for SNAKE_COUNT; ignored otherwise
    event_argument: Optional[int] = attrs.field(
        default=None, validator=attrs.validators.optional(attrs.validators.instance_of(int))
    )
    engine: SolverEngine = attrs.field(default=SolverEngine.AUTO, validator=attrs.validators.instance_of(SolverEngine))

    def with_param(self, param: float) -> "ExperimentConfig":
        """returns the same experiment for another model parameter"""
        return attrs.evolve(self, model_params=self.model_params.with_param(param))

    def with_trials(self, trials: int) -> "ExperimentConfig":
        """returns the same experiment with another number of trials"""
        return attrs.evolve(self, trials=trials)


class ExperimentConfigSchema(Schema):
    """
    A schema to (de-)serialize ExperimentConfigs
    """

    model_params = fields.Nested(ModelParamsSchema)
    event = EnumField(EventKind)
    trials = fields.Integer()
    master_seed = fields.Integer(load_default=0)
    parallelism = fields.Integer(load_default=1)
    event_argument = fields.Integer(allow_none=True, load_default=None)
    engine = EnumField(SolverEngine, by_value=True, load_default=SolverEngine.AUTO)

    @post_load
    def deserialize(self, data, **kwargs) -> ExperimentConfig:
        """
        Converts the barely typed data dictionary into an actual ExperimentConfig
        """
        return ExperimentConfig(**data)


@attrs.frozen(kw_only=True)
class TrialOutcome:
    """
    The outcome of a single trial. Boolean events store 0 or 1 in outcome.
    The runtime is not part of the equality so that two runs of the same config compare equal.
    """

    trial: int = attrs.field(validator=attrs.validators.ge(0))
    seed: int = attrs.field()  #: the integer seed the trial's stream was created from
    param: float = attrs.field(converter=float)
    outcome: int = attrs.field(converter=int, validator=attrs.validators.ge(0))
    elapsed_ms: float = attrs.field(default=0.0, converter=float, eq=False)


@attrs.frozen(kw_only=True)
class TrialBatch:
    """
    All outcomes of one ExperimentConfig, ordered by trial index.
    """

    config: ExperimentConfig
    outcomes: Tuple[TrialOutcome, ...] = attrs.field(converter=tuple)

    def __attrs_post_init__(self) -> None:
        if len(self.outcomes) != self.config.trials:
            raise ValueError(f"Expected {self.config.trials} outcomes but got {len(self.outcomes)}")
        if any(outcome.trial != index for index, outcome in enumerate(self.outcomes)):
            raise ValueError("The outcomes have to be ordered by trial index")

    @property
    def values(self) -> np.ndarray:
        """the outcomes as integer array"""
        return np.fromiter((outcome.outcome for outcome in self.outcomes), dtype=np.int64, count=len(self.outcomes))

    @property
    def successes(self) -> int:
        """number of trials in which a boolean event happened"""
        return int(self.values.sum())

    @property
    def mean(self) -> float:
        """the sample mean of the outcomes"""
        return float(self.values.mean())

    @property
    def standard_error(self) -> float:
        """the standard error of the sample mean (0 for a single trial)"""
        if len(self.outcomes) < 2:
            return 0.0
        return float(self.values.std(ddof=1) / math.sqrt(len(self.outcomes)))


def _strictly_increasing(instance, attribute, value) -> None:
    params = [point.param for point in value]
    if any(later <= earlier for earlier, later in zip(params, params[1:])):
        raise ValueError(f"The parameter grid has to be strictly increasing: {params}")


@attrs.frozen(kw_only=True)
class CurvePoint:
    """
    One grid point of a sweep. For boolean events p_hat is the success frequency with a Wilson interval, for count
    events it is the sample mean with a normal 95% interval.
    """

    param: float = attrs.field(converter=float)
    p_hat: float = attrs.field(converter=float)
    ci_low: float = attrs.field(converter=float)
    ci_high: float = attrs.field(converter=float)
    trials: int = attrs.field(validator=attrs.validators.ge(1))


@attrs.frozen(kw_only=True)
class Curve:
    """
    The result of a parameter sweep; all points share n and the event.
    """

    n: int
    event: EventKind = attrs.field(validator=attrs.validators.instance_of(EventKind))
    points: Tuple[CurvePoint, ...] = attrs.field(
        converter=tuple, validator=[attrs.validators.min_len(1), _strictly_increasing]
    )

    @property
    def params(self) -> np.ndarray:
        """the grid"""
        return np.array([point.param for point in self.points])

    @property
    def estimates(self) -> np.ndarray:
        """p_hat per grid point"""
        return np.array([point.p_hat for point in self.points])

    def __len__(self) -> int:
        return len(self.points)


@attrs.frozen(kw_only=True)
class ThresholdEstimate:
    """
    Where the probability of a monotone event crosses the target (usually 1/2), and how wide the window between
    probability 0.1 and 0.9 is.
    """

    param_at_half: float = attrs.field(converter=float)
    bracket_low: float = attrs.field(converter=float)
    bracket_high: float = attrs.field(converter=float)
    width_10_90: float = attrs.field(converter=float, validator=attrs.validators.ge(0))
    n: int = attrs.field(validator=attrs.validators.instance_of(int))
    target: float = attrs.field(default=0.5, converter=float)
    total_trials: int = attrs.field(default=0)  #: trials spent by bisection and final sweep together

    def __attrs_post_init__(self) -> None:
        if not self.bracket_low <= self.param_at_half <= self.bracket_high:
            raise ValueError(
                f"The estimate {self.param_at_half} lies outside of its bracket "
                f"[{self.bracket_low}, {self.bracket_high}]"
            )

    @property
    def bracket(self) -> Tuple[float, float]:
        """(lo, hi)"""
        return self.bracket_low, self.bracket_high


class ThresholdEstimateSchema(Schema):
    """
    A schema to (de-)serialize ThresholdEstimates; this is the JSON summary of a threshold search
    """

    param_at_half = fields.Float()
    bracket_low = fields.Float()
    bracket_high = fields.Float()
    width_10_90 = fields.Float()
    n = fields.Integer()
    target = fields.Float(load_default=0.5)
    total_trials = fields.Integer(load_default=0)

    @post_load
    def deserialize(self, data, **kwargs) -> ThresholdEstimate:
        """
        Converts the barely typed data dictionary into an actual ThresholdEstimate
        """
        return ThresholdEstimate(**data)


def z_score(empirical: float, standard_error: float, analytic: float) -> float:
    """
    the deviation of a sample mean from its analytic value in units of the standard error.
    A vanishing standard error yields 0 for an exact match and infinity otherwise.
    """
    if standard_error == 0:
        return 0.0 if math.isclose(empirical, analytic, rel_tol=1e-12, abs_tol=1e-300) else math.inf
    return (empirical - analytic) / standard_error


@attrs.frozen(kw_only=True)
class VerificationReport:
    """
    Compares the sample mean of a simulated quantity with a closed form (clause density or moment checks).
    """

    check_id: str  #: e.g. "clause_density", "wedge" or "poisson_moment:3"
    trials: int = attrs.field(validator=attrs.validators.ge(1))
    empirical_mean: float = attrs.field(converter=float)
    standard_error: float = attrs.field(converter=float, validator=attrs.validators.ge(0))
    analytic: AnalyticValue
    z_score: float = attrs.field(converter=float)
    params: Optional[ModelParams] = attrs.field(default=None)
    tolerance: float = attrs.field(default=3.0, converter=float)  #: the largest acceptable |z|

    @property
    def passed(self) -> bool:
        """true iff |z| does not exceed the tolerance"""
        return abs(self.z_score) <= self.tolerance


class VerificationReportSchema(Schema):
    """
    A schema to (de-)serialize VerificationReports
    """

    class Meta:
        """passed is derived; it is dumped but ignored on load"""

        unknown = EXCLUDE

    check_id = fields.String()
    trials = fields.Integer()
    empirical_mean = fields.Float()
    standard_error = fields.Float()
    analytic = fields.Nested(AnalyticValueSchema)
    z_score = fields.Float()
    params = fields.Nested(ModelParamsSchema, allow_none=True, load_default=None)
    tolerance = fields.Float(load_default=3.0)
    passed = fields.Boolean(dump_only=True)

    @post_load
    def deserialize(self, data, **kwargs) -> VerificationReport:
        """
        Converts the barely typed data dictionary into an actual VerificationReport
        """
        return VerificationReport(**data)


@attrs.frozen(kw_only=True)
class CouplingReport:
    """
    The aggregated result of many coupled (continuous, grid) realizations.
    """

    trials: int = attrs.field(validator=attrs.validators.ge(1))
    agreement_rate: float = attrs.field(converter=float)  #: fraction of identical pairs
    collision_report: CollisionReport
    heads_mean: float = attrs.field(converter=float)  #: mean number of extra heads per trial
    heads_expected: float = attrs.field(converter=float)  #: L * N^d * q_heads
    heads_z_score: float = attrs.field(converter=float)
    min_agreement: float = attrs.field(default=0.95, converter=float)

    @property
    def passed(self) -> bool:
        """true iff the agreement rate reaches min_agreement and the heads count matches within 3 sigma"""
        return self.agreement_rate >= self.min_agreement and abs(self.heads_z_score) <= 3.0


class CouplingReportSchema(Schema):
    """
    A schema to (de-)serialize CouplingReports
    """

    class Meta:
        """passed is derived; it is dumped but ignored on load"""

        unknown = EXCLUDE

    trials = fields.Integer()
    agreement_rate = fields.Float()
    collision_report = fields.Nested(CollisionReportSchema)
    heads_mean = fields.Float()
    heads_expected = fields.Float()
    heads_z_score = fields.Float()
    min_agreement = fields.Float(load_default=0.95)
    passed = fields.Boolean(dump_only=True)

    @post_load
    def deserialize(self, data, **kwargs) -> CouplingReport:
        """
        Converts the barely typed data dictionary into an actual CouplingReport
        """
        return CouplingReport(**data)
