"""
The three geometric random k-SAT distributions.

* F_k(n, gamma): 2n points, one per literal, connection radius gamma * n^(-1/d)
* F_k(n, mu): one Poisson process of intensity mu per literal, connection radius n^(-1/d)
* F~(n, r): n points, one per variable; every close k-subset becomes a clause with independent uniform signs

A clause is formed for every k-subset of points that are pairwise within the radius. Tautologies and clauses with a
repeated literal are kept, and so are repeated clauses that stem from different point subsets.
"""

from typing import Tuple

import numpy as np

from geosat.experiments.rng import SeedOrStream, resolve_stream
from geosat.generators import generator_logger
from geosat.geometry.grid_index import enumerate_ball_subsets
from geosat.geometry.sampling import sample_labeled_poisson_processes, sample_uniform_points
from geosat.models.enums import BoundaryMode, Metric, ModelKind
from geosat.models.formula import Formula, GeneratorRecord
from geosat.models.point_set import PointSet


def gamma_radius(n: int, d: int, gamma: float) -> float:
    """r = gamma * n^(-1/d), the radius of F_k(n, gamma)"""
    return float(gamma) * float(n) ** (-1.0 / d)


def mu_radius(n: int, d: int) -> float:
    """r = n^(-1/d), the radius of F_k(n, mu)"""
    return float(n) ** (-1.0 / d)


def _check_size(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"A formula needs at least one variable but n was {n}")
    if k < 2:
        raise ValueError(f"The clause width has to be >= 2 but was {k}")


def _literal_formula(points: PointSet, n: int, k: int, r: float, metric: Metric, record: GeneratorRecord) -> Formula:
    subsets = enumerate_ball_subsets(points, r, k, metric)
    return Formula.from_label_rows(n, k, points.labels[subsets], subsets, generator_record=record)


# pylint:disable=too-many-arguments
def generate_f_gamma(
    n: int,
    k: int,
    d: int,
    gamma: float,
    metric: Metric = Metric.LINF,
    boundary_mode: BoundaryMode = BoundaryMode.CUBE,
    rng: SeedOrStream = 0,
) -> Tuple[PointSet, Formula]:
    """
    draws F_k(n, gamma). Point i carries the literal label i+1, so every literal appears exactly once.
    """
    _check_size(n, k)
    if gamma <= 0:
        raise ValueError(f"gamma has to be positive but was {gamma}")
    stream, seed = resolve_stream(rng)
    labels = np.arange(1, 2 * n + 1, dtype=np.int64)
    points = sample_uniform_points(2 * n, d, stream, boundary_mode=boundary_mode, labels=labels, label_universe=2 * n)
    record = GeneratorRecord(
        model=ModelKind.GAMMA, n=n, k=k, d=d, param=gamma, metric=metric, boundary=boundary_mode, seed=seed
    )
    formula = _literal_formula(points, n, k, gamma_radius(n, d, gamma), metric, record)
    generator_logger.debug("F_%i(n=%i, gamma=%s) in d=%i has %i clauses", k, n, gamma, d, formula.clause_count)
    return points, formula


def generate_f_mu(
    n: int,
    k: int,
    d: int,
    mu: float,
    metric: Metric = Metric.LINF,
    boundary_mode: BoundaryMode = BoundaryMode.CUBE,
    rng: SeedOrStream = 0,
) -> Tuple[PointSet, Formula]:
    """
    draws F_k(n, mu). Each literal appears Poisson(mu) times; two points of the same literal may share a clause.
    """
    _check_size(n, k)
    if mu < 0:
        raise ValueError(f"mu must not be negative but was {mu}")
    stream, seed = resolve_stream(rng)
    points = sample_labeled_poisson_processes(mu, 2 * n, d, stream, boundary_mode=boundary_mode)
    record = GeneratorRecord(
        model=ModelKind.MU, n=n, k=k, d=d, param=mu, metric=metric, boundary=boundary_mode, seed=seed
    )
    formula = _literal_formula(points, n, k, mu_radius(n, d), metric, record)
    generator_logger.debug("F_%i(n=%i, mu=%s) in d=%i has %i clauses", k, n, mu, d, formula.clause_count)
    return points, formula


def generate_f_tilde(
    n: int,
    k: int,
    d: int,
    r: float,
    metric: Metric = Metric.LINF,
    boundary_mode: BoundaryMode = BoundaryMode.CUBE,
    rng: SeedOrStream = 0,
) -> Tuple[PointSet, Formula]:
    """
    draws F~(n, r). Point i carries the variable label i+1. The signs of every clause are drawn freshly, after all
    points have been placed.
    """
    _check_size(n, k)
    if r <= 0:
        raise ValueError(f"The radius has to be positive but was {r}")
    stream, seed = resolve_stream(rng)
    labels = np.arange(1, n + 1, dtype=np.int64)
    points = sample_uniform_points(n, d, stream, boundary_mode=boundary_mode, labels=labels, label_universe=n)
    subsets = enumerate_ball_subsets(points, r, k, metric)
    negated = stream.integers(0, 2, size=subsets.shape, dtype=np.int64)
    literal_rows = 2 * points.labels[subsets] - 1 + negated
    record = GeneratorRecord(
        model=ModelKind.TILDE, n=n, k=k, d=d, param=r, metric=metric, boundary=boundary_mode, seed=seed
    )
    return points, Formula.from_label_rows(n, k, literal_rows, subsets, generator_record=record)
