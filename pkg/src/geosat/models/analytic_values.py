"""
Contains the parameter record of a random model and the AnalyticValue which wraps every closed form result.
"""

# pylint: disable=too-few-public-methods, unused-argument
from typing import Optional

import attrs
from marshmallow import Schema, fields, post_load
from marshmallow_enum import EnumField  # type:ignore[import-untyped]

from geosat.models.enums import BoundaryMode, Metric, ModelKind, ValueKind


def _check_param(instance: "ModelParams", attribute, value: float) -> None:
    if instance.model == ModelKind.MU or instance.model == ModelKind.RGG_POISSON:
        if value < 0:
            raise ValueError(f"The intensity of a {instance.model} model must be >= 0 but was {value}")
    elif value <= 0:
        raise ValueError(f"The parameter of a {instance.model} model must be > 0 but was {value}")


@attrs.define(auto_attribs=True, kw_only=True, frozen=True)
class ModelParams:
    """
    The parameters of one of the random models.
    The meaning of param depends on the model: gamma for GAMMA, mu for MU and RGG_POISSON, r for TILDE and RGG_FIXED.
    """

    model: ModelKind = attrs.field(validator=attrs.validators.instance_of(ModelKind))
    n: int = attrs.field(validator=[attrs.validators.instance_of(int), attrs.validators.ge(0)])
    k: int = attrs.field(validator=[attrs.validators.instance_of(int), attrs.validators.ge(2)])
    d: int = attrs.field(validator=[attrs.validators.instance_of(int), attrs.validators.ge(1)])
    param: float = attrs.field(converter=float, validator=_check_param)
    metric: Metric = attrs.field(default=Metric.LINF, validator=attrs.validators.instance_of(Metric))
    boundary_mode: BoundaryMode = attrs.field(
        default=BoundaryMode.CUBE, validator=attrs.validators.instance_of(BoundaryMode)
    )
    #: only used by RGG_POISSON, where param is the intensity and the connection radius is given separately
    radius: Optional[float] = attrs.field(
        default=None,
        converter=attrs.converters.optional(float),
        validator=attrs.validators.optional(attrs.validators.gt(0)),
    )

    def with_param(self, param: float) -> "ModelParams":
        """
        returns a copy with a different model parameter (used by sweeps)
        """
        return attrs.evolve(self, param=param)

    def with_n(self, n: int) -> "ModelParams":
        """returns a copy with a different size parameter n"""
        return attrs.evolve(self, n=n)


class ModelParamsSchema(Schema):
    """
    A schema to (de-)serialize ModelParams
    """

    model = EnumField(ModelKind)
    n = fields.Integer()
    k = fields.Integer()
    d = fields.Integer()
    param = fields.Float()
    metric = EnumField(Metric, load_default=Metric.LINF)
    boundary_mode = EnumField(BoundaryMode, load_default=BoundaryMode.CUBE)
    radius = fields.Float(allow_none=True, load_default=None)

    @post_load
    def deserialize(self, data, **kwargs) -> ModelParams:
        """
        Converts the barely typed data dictionary into actual ModelParams
        """
        return ModelParams(**data)


@attrs.define(auto_attribs=True, kw_only=True, frozen=True)
class AnalyticValue:
    """
    A closed form quantity (probability, expectation, threshold constant or bound).
    The kind decides how a simulated value has to be compared against it.
    """

    value: float = attrs.field(converter=float)
    kind: ValueKind = attrs.field(validator=attrs.validators.instance_of(ValueKind))
    formula_id: str = attrs.field(validator=attrs.validators.instance_of(str))  #: e.g. "clique_prob" or "wedge_prob"

    def __float__(self) -> float:
        return self.value


class AnalyticValueSchema(Schema):
    """
    A schema to (de-)serialize AnalyticValues; the JSON shape is {value, kind, formula_id}
    """

    value = fields.Float()
    kind = EnumField(ValueKind)
    formula_id = fields.String()

    @post_load
    def deserialize(self, data, **kwargs) -> AnalyticValue:
        """
        Converts the barely typed data dictionary into an actual AnalyticValue
        """
        return AnalyticValue(**data)
