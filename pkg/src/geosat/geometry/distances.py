"""
Distances between points in the unit cube or on the unit torus.
"""

import numpy as np
import numpy.typing as npt

from geosat.geometry import DimensionMismatchError
from geosat.models.enums import BoundaryMode, Metric
from geosat.models.point_set import Point


def coordinate_gaps(first: npt.ArrayLike, second: npt.ArrayLike, boundary_mode: BoundaryMode) -> np.ndarray:
    """
    the per coordinate gaps |a-b|; on the torus min(|a-b|, 1-|a-b|). Works on arrays of points (last axis = d).
    """
    gaps = np.abs(np.asarray(first, dtype=np.float64) - np.asarray(second, dtype=np.float64))
    if boundary_mode == BoundaryMode.TORUS:
        gaps = np.minimum(gaps, 1.0 - gaps)
    return gaps


def norms_of_gaps(gaps: np.ndarray, metric: Metric) -> np.ndarray:
    """
    reduces the last axis of per coordinate gaps to a distance
    """
    if metric == Metric.LINF:
        return gaps.max(axis=-1, initial=0.0)
    return np.sqrt(np.square(gaps).sum(axis=-1))


def distance(
    p: Point, q: Point, metric: Metric = Metric.LINF, boundary_mode: BoundaryMode = BoundaryMode.CUBE
) -> float:
    """
    the distance of two points
    :raises DimensionMismatchError: if the points have different dimensions
    """
    if p.dimension != q.dimension:
        raise DimensionMismatchError(p.dimension, q.dimension)
    return float(norms_of_gaps(coordinate_gaps(p.coords, q.coords, boundary_mode), metric))


def pairwise_distances(
    coordinates: npt.ArrayLike, metric: Metric = Metric.LINF, boundary_mode: BoundaryMode = BoundaryMode.CUBE
) -> np.ndarray:
    """
    the full (count x count) distance matrix; only meant for small point sets (brute force checks)
    """
    coordinate_array = np.asarray(coordinates, dtype=np.float64)
    gaps = coordinate_gaps(coordinate_array[:, np.newaxis, :], coordinate_array[np.newaxis, :, :], boundary_mode)
    return norms_of_gaps(gaps, metric)
