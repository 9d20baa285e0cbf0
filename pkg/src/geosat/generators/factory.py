"""
Dispatches a parameter record to the matching generator. This is how the experiments draw their random objects and
how a JSON sidecar is turned back into the exact object it describes.
"""

from typing import Tuple, Union

from geosat.experiments.rng import SeedOrStream
from geosat.generators.formulas import generate_f_gamma, generate_f_mu, generate_f_tilde
from geosat.generators.rgg import generate_rgg, generate_rgg_fixed
from geosat.models.analytic_values import ModelParams
from geosat.models.enums import ModelKind
from geosat.models.formula import Formula, GeneratorRecord, Hypergraph
from geosat.models.point_set import PointSet

GeneratedObject = Union[Formula, Hypergraph]


def generate_from_params(params: ModelParams, rng: SeedOrStream) -> Tuple[PointSet, GeneratedObject]:
    """
    draws one realization of the model described by params
    :raises ValueError: if an RGG_POISSON model comes without radius
    """
    if params.model == ModelKind.GAMMA:
        return generate_f_gamma(params.n, params.k, params.d, params.param, params.metric, params.boundary_mode, rng)
    if params.model == ModelKind.MU:
        return generate_f_mu(params.n, params.k, params.d, params.param, params.metric, params.boundary_mode, rng)
    if params.model == ModelKind.TILDE:
        return generate_f_tilde(params.n, params.k, params.d, params.param, params.metric, params.boundary_mode, rng)
    if params.model == ModelKind.RGG_FIXED:
        return generate_rgg_fixed(params.n, params.param, params.d, params.k, params.metric, params.boundary_mode, rng)
    if params.model == ModelKind.RGG_POISSON:
        if params.radius is None:
            raise ValueError("G_d(n, mu, r) needs a radius in addition to the intensity")
        return generate_rgg(
            params.n, params.param, params.radius, params.d, params.k, params.metric, params.boundary_mode, rng
        )
    raise NotImplementedError(f"The model '{params.model}' is not implemented yet.")


def regenerate(record: GeneratorRecord) -> Tuple[PointSet, GeneratedObject]:
    """
    recreates the point set and the formula (or hypergraph) a record was written for
    :raises ValueError: if the record has no seed
    """
    if record.seed is None:
        raise ValueError("The record has no seed; the object was drawn from a caller supplied stream")
    return generate_from_params(record.to_model_params(), record.seed)
