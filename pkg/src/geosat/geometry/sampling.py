"""
Samplers for uniform point sets and (homogeneous) Poisson point processes on [0,1]^d.
All samplers draw from a numpy Generator that is owned by the caller.
"""

from typing import Optional

import numpy as np
import numpy.typing as npt

from geosat.geometry import geometry_logger
from geosat.models.enums import BoundaryMode
from geosat.models.point_set import PointSet


def _check_dimension(d: int) -> None:
    if d < 1:
        raise ValueError(f"The dimension has to be >= 1 but was {d}")


def sample_uniform_points(
    count: int,
    d: int,
    rng: np.random.Generator,
    boundary_mode: BoundaryMode = BoundaryMode.CUBE,
    labels: Optional[npt.ArrayLike] = None,
    label_universe: int = 1,
) -> PointSet:
    """
    places count points independently and uniformly in [0,1]^d
    :param count: number of points (0 yields an empty point set)
    :param d: dimension
    :param rng: the random stream
    :param boundary_mode: recorded in the point set; it does not change the distribution
    :param labels: one label per point; all points get label 1 if omitted
    :param label_universe: the number L of possible labels
    """
    _check_dimension(d)
    if count < 0:
        raise ValueError(f"The number of points must not be negative but was {count}")
    coordinates = rng.random((count, d))
    if labels is None:
        label_array = np.ones(count, dtype=np.int64)
    else:
        label_array = np.asarray(labels, dtype=np.int64)
    return PointSet(
        dimension=d,
        boundary_mode=boundary_mode,
        coordinates=coordinates,
        labels=label_array,
        label_universe=label_universe,
    )


def sample_poisson_process(
    intensity: float,
    d: int,
    rng: np.random.Generator,
    boundary_mode: BoundaryMode = BoundaryMode.CUBE,
) -> PointSet:
    """
    draws a Poisson point process of the given (total) intensity on [0,1]^d:
    the number of points is Poisson(intensity) and given the number the positions are independent and uniform.
    """
    _check_dimension(d)
    if intensity < 0:
        raise ValueError(f"The intensity must not be negative but was {intensity}")
    count = int(rng.poisson(intensity))
    geometry_logger.debug("Poisson process with intensity %s produced %i points", intensity, count)
    return sample_uniform_points(count, d, rng, boundary_mode=boundary_mode)


def sample_labeled_poisson_processes(
    intensity_per_label: float,
    label_universe: int,
    d: int,
    rng: np.random.Generator,
    boundary_mode: BoundaryMode = BoundaryMode.CUBE,
) -> PointSet:
    """
    draws one independent Poisson point process of the given intensity for each of the labels 1..label_universe.
    The points are ordered by label.
    """
    _check_dimension(d)
    if intensity_per_label < 0:
        raise ValueError(f"The intensity must not be negative but was {intensity_per_label}")
    counts = rng.poisson(intensity_per_label, size=label_universe)
    labels = np.repeat(np.arange(1, label_universe + 1, dtype=np.int64), counts)
    return sample_uniform_points(
        int(counts.sum()), d, rng, boundary_mode=boundary_mode, labels=labels, label_universe=label_universe
    )
