"""
The random geometric (hyper)graphs G_d(n, mu, r) (Poisson number of points) and G_d(n, r) (exactly n points).
A hyperedge joins every k points that are pairwise within distance r.
"""

from typing import Tuple

from geosat.experiments.rng import SeedOrStream, resolve_stream
from geosat.generators import generator_logger
from geosat.geometry.grid_index import enumerate_ball_subsets
from geosat.geometry.sampling import sample_poisson_process, sample_uniform_points
from geosat.models.enums import BoundaryMode, Metric, ModelKind
from geosat.models.formula import GeneratorRecord, Hypergraph
from geosat.models.point_set import PointSet


# pylint:disable=too-many-arguments
def generate_rgg(
    n: int,
    mu: float,
    r: float,
    d: int,
    k: int = 2,
    metric: Metric = Metric.LINF,
    boundary_mode: BoundaryMode = BoundaryMode.CUBE,
    rng: SeedOrStream = 0,
) -> Tuple[PointSet, Hypergraph]:
    """
    draws G_d(n, mu, r): a Poisson point process of intensity n*mu on [0,1]^d, with a k-hyperedge on every k points
    that are pairwise within distance r
    """
    if n * mu < 0:
        raise ValueError(f"The intensity n*mu must not be negative but was {n * mu}")
    if r <= 0:
        raise ValueError(f"The radius has to be positive but was {r}")
    stream, seed = resolve_stream(rng)
    points = sample_poisson_process(n * mu, d, stream, boundary_mode=boundary_mode)
    edges = enumerate_ball_subsets(points, r, k, metric)
    record = GeneratorRecord(
        model=ModelKind.RGG_POISSON,
        n=n,
        k=k,
        d=d,
        param=mu,
        metric=metric,
        boundary=boundary_mode,
        seed=seed,
        radius=r,
    )
    generator_logger.debug("G_d(n=%i, mu=%s, r=%s) has %i points and %i edges", n, mu, r, len(points), len(edges))
    return points, Hypergraph(vertex_count=len(points), k=k, edges=edges, generator_record=record)


def generate_rgg_fixed(
    n: int,
    r: float,
    d: int,
    k: int = 2,
    metric: Metric = Metric.LINF,
    boundary_mode: BoundaryMode = BoundaryMode.CUBE,
    rng: SeedOrStream = 0,
) -> Tuple[PointSet, Hypergraph]:
    """
    draws G_d(n, r): n independent uniform points in [0,1]^d, with a k-hyperedge on every k points that are pairwise
    within distance r
    """
    if n < 0:
        raise ValueError(f"The number of points must not be negative but was {n}")
    if r <= 0:
        raise ValueError(f"The radius has to be positive but was {r}")
    stream, seed = resolve_stream(rng)
    points = sample_uniform_points(n, d, stream, boundary_mode=boundary_mode)
    edges = enumerate_ball_subsets(points, r, k, metric)
    record = GeneratorRecord(
        model=ModelKind.RGG_FIXED, n=n, k=k, d=d, param=r, metric=metric, boundary=boundary_mode, seed=seed
    )
    return points, Hypergraph(vertex_count=len(points), k=k, edges=edges, generator_record=record)
