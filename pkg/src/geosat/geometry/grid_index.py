"""
A uniform grid over [0,1]^d that is used to find all groups of points that are pairwise within distance r.

The cells have width 1/m with m = floor(1/r), the smallest width >= r that tiles the unit interval exactly. Two points
within distance r therefore always sit in the same or in adjacent cells, also across the boundary of the torus.
Pairs are searched in the 3^d neighbourhood of each cell; larger groups are grown from the pairs as cliques.
"""

import itertools
import math
from typing import Dict, List, Sequence, Tuple

import attrs
import numpy as np

from geosat.geometry import geometry_logger
from geosat.geometry.distances import coordinate_gaps, norms_of_gaps
from geosat.models.enums import BoundaryMode, Metric
from geosat.models.point_set import PointSet

MAX_SUBSET_SIZE = 12  #: k-subsets are only enumerated up to this size


def _cells_per_axis(r: float, d: int) -> int:
    if r <= 0:
        raise ValueError(f"The radius has to be positive but was {r}")
    if r >= 1:
        return 1
    cells = max(1, int(math.floor(1.0 / r)))
    while cells > 1 and 1.0 / cells < r:  # 1/r may be rounded up across an integer
        cells -= 1
    # linear cell keys have to fit into int64
    cells = min(cells, int(2 ** (62 / d)))
    return max(cells, 1)


@attrs.frozen(kw_only=True)
class GridIndex:
    """
    Assigns every point of a point set to exactly one grid cell. The cell of a point is floor(coords / cell_size);
    the coordinate 1.0 is clamped into the last cell.
    """

    cell_size: float = attrs.field(validator=[attrs.validators.gt(0), attrs.validators.le(1)])
    cells_per_axis: int = attrs.field(validator=attrs.validators.ge(1))
    boundary_mode: BoundaryMode = attrs.field(validator=attrs.validators.instance_of(BoundaryMode))
    point_cells: np.ndarray = attrs.field(eq=attrs.cmp_using(eq=np.array_equal))  #: (count, d) integer cell coordinates

    @property
    def dimension(self) -> int:
        """d"""
        return int(self.point_cells.shape[1])

    def linear_keys(self, cells: np.ndarray) -> np.ndarray:
        """maps (.., d) integer cell coordinates to one integer key per cell"""
        weights = self.cells_per_axis ** np.arange(self.dimension - 1, -1, -1, dtype=np.int64)
        return cells.astype(np.int64) @ weights

    @property
    def cells(self) -> Dict[Tuple[int, ...], List[int]]:
        """the occupied cells, mapped to the indices of the points inside (in increasing order)"""
        result: Dict[Tuple[int, ...], List[int]] = {}
        for index, cell in enumerate(self.point_cells):
            result.setdefault(tuple(int(c) for c in cell), []).append(index)
        return result

    def neighbour_offsets(self) -> List[Tuple[int, ...]]:
        """
        the distinct offsets to the cells of the 3^d neighbourhood. On a torus with fewer than 3 cells per axis
        several offsets lead to the same cell; only one of them is kept.
        """
        if self.boundary_mode == BoundaryMode.TORUS:
            per_axis = sorted({offset % self.cells_per_axis for offset in (-1, 0, 1)})
        elif self.cells_per_axis == 1:
            per_axis = [0]
        else:
            per_axis = [-1, 0, 1]
        return list(itertools.product(per_axis, repeat=self.dimension))


def build_grid_index(ps: PointSet, r: float) -> GridIndex:
    """
    builds the grid index of the point set for the radius r
    """
    cells_per_axis = _cells_per_axis(r, ps.dimension)
    point_cells = np.minimum(
        np.floor(ps.coordinates * cells_per_axis).astype(np.int64), cells_per_axis - 1
    ).reshape(-1, ps.dimension)
    return GridIndex(
        cell_size=1.0 / cells_per_axis,
        cells_per_axis=cells_per_axis,
        boundary_mode=ps.boundary_mode,
        point_cells=point_cells,
    )


def _candidate_pairs(index: GridIndex) -> Tuple[np.ndarray, np.ndarray]:
    """all (i, j) with i < j whose cells are neighbours"""
    keys = index.linear_keys(index.point_cells)
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    sources: List[np.ndarray] = []
    targets: List[np.ndarray] = []
    for offset in index.neighbour_offsets():
        neighbour_cells = index.point_cells + np.asarray(offset, dtype=np.int64)
        if index.boundary_mode == BoundaryMode.TORUS:
            neighbour_cells %= index.cells_per_axis
            valid = np.arange(len(keys))
        else:
            inside = np.all((neighbour_cells >= 0) & (neighbour_cells < index.cells_per_axis), axis=1)
            valid = np.flatnonzero(inside)
        neighbour_keys = index.linear_keys(neighbour_cells[valid])
        lower = np.searchsorted(sorted_keys, neighbour_keys, side="left")
        upper = np.searchsorted(sorted_keys, neighbour_keys, side="right")
        counts = upper - lower
        total = int(counts.sum())
        if total == 0:
            continue
        source = np.repeat(valid, counts)
        position_in_run = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
        target = order[np.repeat(lower, counts) + position_in_run]
        keep = source < target
        sources.append(source[keep])
        targets.append(target[keep])
    if not sources:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    return np.concatenate(sources), np.concatenate(targets)


def close_pairs(ps: PointSet, r: float, metric: Metric = Metric.LINF) -> np.ndarray:
    """
    returns all index pairs (i, j), i < j, of points within distance r as (m, 2) array in lexicographic order
    """
    if len(ps) < 2:
        return np.empty((0, 2), dtype=np.int64)
    index = build_grid_index(ps, r)
    sources, targets = _candidate_pairs(index)
    gaps = coordinate_gaps(ps.coordinates[sources], ps.coordinates[targets], ps.boundary_mode)
    within = norms_of_gaps(gaps, metric) <= r
    sources, targets = sources[within], targets[within]
    order = np.lexsort((targets, sources))
    pairs = np.stack([sources[order], targets[order]], axis=1).astype(np.int64)
    geometry_logger.debug("Found %i pairs within distance %s among %i points", len(pairs), r, len(ps))
    return pairs


def _grow_cliques(forward: Sequence[np.ndarray], adjacency: Sequence[frozenset], k: int) -> List[Tuple[int, ...]]:
    """
    all k-cliques as increasing index tuples in lexicographic order.
    forward[i] holds the (sorted) neighbours j > i of i.
    """
    result: List[Tuple[int, ...]] = []

    def extend(clique: Tuple[int, ...], candidates: List[int]) -> None:
        if len(clique) == k:
            result.append(clique)
            return
        for position, vertex in enumerate(candidates):
            if len(clique) + len(candidates) - position < k:
                break
            extend(clique + (vertex,), [other for other in candidates[position + 1 :] if other in adjacency[vertex]])

    for start, neighbours in enumerate(forward):
        if len(neighbours) >= k - 1:
            extend((start,), [int(vertex) for vertex in neighbours])
    return result


def enumerate_ball_subsets(ps: PointSet, r: float, k: int, metric: Metric = Metric.LINF) -> np.ndarray:
    """
    returns all k-subsets of points that are pairwise within distance r.
    Every k-subset of a larger group is returned once. The result is an (m, k) array of increasing index tuples in
    lexicographic order.
    :raises ValueError: if r <= 0 or k is not in 2..12
    """
    if r <= 0:
        raise ValueError(f"The radius has to be positive but was {r}")
    if not 2 <= k <= MAX_SUBSET_SIZE:
        raise ValueError(f"The subset size has to be in 2..{MAX_SUBSET_SIZE} but was {k}")
    if len(ps) < k:
        return np.empty((0, k), dtype=np.int64)
    pairs = close_pairs(ps, r, metric)
    if k == 2:
        return pairs
    split_at = np.searchsorted(pairs[:, 0], np.arange(1, len(ps)), side="left")
    forward = np.split(pairs[:, 1], split_at)
    neighbour_lists: List[List[int]] = [[] for _ in range(len(ps))]
    for first, second in pairs:
        neighbour_lists[first].append(int(second))
        neighbour_lists[second].append(int(first))
    adjacency = [frozenset(neighbours) for neighbours in neighbour_lists]
    subsets = _grow_cliques(forward, adjacency, k)
    if not subsets:
        return np.empty((0, k), dtype=np.int64)
    return np.array(subsets, dtype=np.int64)
