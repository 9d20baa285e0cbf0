"""
Contains the Point and the PointSet, the raw output of every sampler.
A PointSet stores its coordinates as one (count x d) float array and its labels as one integer array. Single Points are
only materialized on request; all the heavy lifting happens on the arrays.
"""

from typing import Iterator, Tuple

import attrs
import numpy as np
import numpy.typing as npt

from geosat.models.enums import BoundaryMode


def _readonly_float_matrix(value) -> np.ndarray:
    array = np.array(value, dtype=np.float64, copy=True, ndmin=2)
    array.setflags(write=False)
    return array


def _readonly_int_vector(value) -> np.ndarray:
    array = np.array(value, dtype=np.int64, copy=True, ndmin=1)
    array.setflags(write=False)
    return array


# pylint:disable=unused-argument
def _check_unit_interval(instance, attribute, value: Tuple[float, ...]) -> None:
    if any(not 0.0 <= coordinate <= 1.0 for coordinate in value):
        raise ValueError(f"All coordinates of a point have to lie in [0,1] but got {value}")


@attrs.frozen(kw_only=True)
class Point:
    """
    A single position in the unit cube [0,1]^d.
    """

    coords: Tuple[float, ...] = attrs.field(
        converter=lambda values: tuple(float(x) for x in values),
        validator=[attrs.validators.min_len(1), _check_unit_interval],
    )

    @property
    def dimension(self) -> int:
        """the ambient dimension d of the point"""
        return len(self.coords)


# pylint:disable=too-few-public-methods
@attrs.frozen(kw_only=True)
class PointSet:
    """
    Labeled positions in [0,1]^d. Label i in {1, ..., label_universe} identifies the literal (or the variable) that a
    point represents; an unlabeled point set uses label 1 for everything (label_universe=1).
    A PointSet is immutable after construction; the arrays are flagged read-only.
    """

    dimension: int = attrs.field(validator=[attrs.validators.instance_of(int), attrs.validators.ge(1)])
    boundary_mode: BoundaryMode = attrs.field(
        default=BoundaryMode.CUBE, validator=attrs.validators.instance_of(BoundaryMode)
    )
    coordinates: np.ndarray = attrs.field(
        converter=_readonly_float_matrix, eq=attrs.cmp_using(eq=np.array_equal)
    )  #: shape (count, dimension)
    labels: np.ndarray = attrs.field(converter=_readonly_int_vector, eq=attrs.cmp_using(eq=np.array_equal))
    label_universe: int = attrs.field(default=1, validator=[attrs.validators.instance_of(int), attrs.validators.ge(1)])

    def __attrs_post_init__(self) -> None:
        if self.coordinates.size == 0:
            # np.array([], ndmin=2) has shape (1, 0); normalize empty sets to shape (0, d)
            object.__setattr__(self, "coordinates", _readonly_float_matrix(np.empty((0, self.dimension))))
        if self.coordinates.shape[1] != self.dimension:
            raise ValueError(
                f"The coordinates have dimension {self.coordinates.shape[1]} but the point set has {self.dimension}"
            )
        if self.labels.shape[0] != self.coordinates.shape[0]:
            raise ValueError(f"Got {self.labels.shape[0]} labels for {self.coordinates.shape[0]} points")
        if self.coordinates.size and (self.coordinates.min() < 0.0 or self.coordinates.max() > 1.0):
            raise ValueError("All coordinates have to lie in [0,1]")
        if self.labels.size and (self.labels.min() < 1 or self.labels.max() > self.label_universe):
            raise ValueError(f"All labels have to be drawn from 1..{self.label_universe}")

    def __len__(self) -> int:
        return int(self.coordinates.shape[0])

    def point(self, index: int) -> Point:
        """returns the point with the given index"""
        return Point(coords=self.coordinates[index])

    def __iter__(self) -> Iterator[Tuple[Point, int]]:
        """yields (Point, label) pairs in index order"""
        for index in range(len(self)):
            yield self.point(index), int(self.labels[index])

    def with_coordinates(self, coordinates: npt.ArrayLike) -> "PointSet":
        """
        returns a copy with the same labels but different coordinates (used for snapping and translations)
        """
        return PointSet(
            dimension=self.dimension,
            boundary_mode=self.boundary_mode,
            coordinates=coordinates,
            labels=self.labels,
            label_universe=self.label_universe,
        )

    def subset(self, indices: npt.ArrayLike) -> "PointSet":
        """
        returns the point set restricted to the given indices (in the given order)
        """
        index_array = np.asarray(indices, dtype=np.int64)
        return PointSet(
            dimension=self.dimension,
            boundary_mode=self.boundary_mode,
            coordinates=self.coordinates[index_array].reshape(-1, self.dimension),
            labels=self.labels[index_array],
            label_universe=self.label_universe,
        )
