"""
Couples F_k(n, mu) with its discretization on a grid of N^d points, N = 16^d n^3.

Gridpoint (i_1, ..., i_d) sits at ((i_1 - 1/2)/N, ..., (i_d - 1/2)/N) and owns the region
((i_1 - 1)/N, i_1/N] x ... x ((i_d - 1)/N, i_d/N]. In the discrete model every one of the L = 2n labels is present at
every gridpoint independently with probability q = mu/N^d (the per literal intensity times the cell volume).

The coupling is simulated from the continuous side: a label is present at a gridpoint if at least one point of that
label falls into the region of the gridpoint. For every other (label, gridpoint) slot an independent coin with
heads probability e^q (q - (1 - e^-q)) decides; the number of heads is drawn in one go as
Binomial(free slots, heads probability) and the heads are spread uniformly over the free slots. Materializing the
L * N^d slots is never necessary.
"""

import decimal
from decimal import Decimal
from typing import Set, Tuple, Union

import attrs
import numpy as np

from geosat.experiments.rng import SeedOrStream, resolve_stream
from geosat.generators import CouplingRangeError, generator_logger
from geosat.generators.formulas import generate_f_mu, mu_radius
from geosat.geometry.grid_index import close_pairs, enumerate_ball_subsets
from geosat.models.coupling import CollisionReport, CoupledPair
from geosat.models.enums import BoundaryMode, Metric, ModelKind
from geosat.models.formula import Formula, GeneratorRecord
from geosat.models.point_set import PointSet

HEADS_PRECISION = 50  #: decimal digits used for the coin probability
MAX_GRID_SIZE = 2**52  #: above this the gridpoint coordinates are no longer exact doubles
MAX_SLOTS = 2**63 - 1  #: the number of (label, gridpoint) slots has to fit into an int64


def coupling_grid_size(n: int, d: int) -> int:
    """N = 16^d n^3 (exact integer)"""
    return 16**d * n**3


def coupling_heads_probability(q: Union[float, Decimal]) -> float:
    """
    the heads probability e^q (q - (1 - e^-q)) of the coin that is flipped for an empty slot, evaluated with 50 digits.
    For small q it is about q^2/2, far below the resolution of a naive double evaluation of q - (1 - e^-q).
    """
    with decimal.localcontext() as context:
        context.prec = HEADS_PRECISION
        q_decimal = Decimal(q)
        return float(q_decimal.exp() * (q_decimal - (1 - (-q_decimal).exp())))


def slot_probability(mu: float, grid_size: int, d: int) -> Decimal:
    """q = mu / N^d with 50 digits"""
    with decimal.localcontext() as context:
        context.prec = HEADS_PRECISION
        return Decimal(mu) / Decimal(grid_size**d)


def expected_extra_heads(n: int, d: int, mu: float) -> float:
    """
    the mean number of heads, L N^d e^-q (heads probability) = L N^d (q - 1 + e^-q):
    every slot is empty with probability e^-q and only empty slots flip a coin
    """
    grid_size = coupling_grid_size(n, d)
    with decimal.localcontext() as context:
        context.prec = HEADS_PRECISION
        q = slot_probability(mu, grid_size, d)
        slots = Decimal(2 * n) * Decimal(grid_size**d)
        return float(slots * (q - 1 + (-q).exp()))


def _check_range(n: int, d: int, grid_size: int) -> int:
    if grid_size >= MAX_GRID_SIZE:
        raise CouplingRangeError(n, d, grid_size, "the gridpoint coordinates are not exactly representable")
    slots = 2 * n * grid_size**d
    if slots > MAX_SLOTS:
        raise CouplingRangeError(n, d, grid_size, f"the {slots} label slots exceed the int64 range")
    return slots


def _grid_cells(coordinates: np.ndarray, grid_size: int) -> np.ndarray:
    """the 0-based cell index per coordinate; the region of cell i is (i/N, (i+1)/N]"""
    return np.clip(np.ceil(coordinates * grid_size).astype(np.int64), 1, grid_size) - 1


def _cell_centers(cells: np.ndarray, grid_size: int) -> np.ndarray:
    return (cells.astype(np.float64) + 0.5) / grid_size


def _draw_heads(
    heads: int,
    label_universe: int,
    grid_size: int,
    d: int,
    occupied: Set[Tuple[int, ...]],
    stream: np.random.Generator,
) -> np.ndarray:
    """draws `heads` distinct free (label, cell...) slots uniformly"""
    chosen: Set[Tuple[int, ...]] = set()
    while len(chosen) < heads:
        missing = heads - len(chosen)
        labels = stream.integers(1, label_universe + 1, size=(missing, 1), dtype=np.int64)
        cells = stream.integers(0, grid_size, size=(missing, d), dtype=np.int64)
        for slot in np.concatenate([labels, cells], axis=1):
            key = tuple(int(value) for value in slot)
            if key not in occupied and key not in chosen and len(chosen) < heads:
                chosen.add(key)
    if not chosen:
        return np.empty((0, d + 1), dtype=np.int64)
    return np.array(sorted(chosen), dtype=np.int64)


def _boundary_flips(points: PointSet, snapped: np.ndarray, r: float, metric: Metric) -> int:
    """number of point pairs that are close before but not after snapping (or vice versa)"""
    count = len(points)
    before = close_pairs(points, r, metric)
    after = close_pairs(points.with_coordinates(snapped), r, metric)
    return int(np.setxor1d(before[:, 0] * count + before[:, 1], after[:, 0] * count + after[:, 1]).size)


# pylint:disable=too-many-arguments, too-many-locals
def generate_discrete_coupled(
    n: int,
    k: int,
    d: int,
    mu: float,
    rng: SeedOrStream = 0,
    metric: Metric = Metric.LINF,
    boundary_mode: BoundaryMode = BoundaryMode.CUBE,
) -> CoupledPair:
    """
    draws F_k(n, mu) and the coupled formula of the grid model
    :raises CouplingRangeError: if N = 16^d n^3 is too large for exact arithmetic
    """
    if mu <= 0:
        raise ValueError(f"The coupling needs a positive intensity but mu was {mu}")
    grid_size = coupling_grid_size(n, d)
    slots = _check_range(n, d, grid_size)
    stream, seed = resolve_stream(rng)
    label_universe = 2 * n
    points, continuous = generate_f_mu(n, k, d, mu, metric, boundary_mode, stream)
    record = GeneratorRecord(
        model=ModelKind.MU, n=n, k=k, d=d, param=mu, metric=metric, boundary=boundary_mode, seed=seed
    )
    continuous = attrs.evolve(continuous, generator_record=record)

    cells = _grid_cells(points.coordinates, grid_size)
    slot_keys = np.concatenate([points.labels.reshape(-1, 1), cells], axis=1)
    occupied_slots = np.unique(slot_keys, axis=0) if len(points) else np.empty((0, d + 1), dtype=np.int64)
    same_cell_duplicates = len(points) - len(occupied_slots)

    heads_probability = coupling_heads_probability(slot_probability(mu, grid_size, d))
    heads = int(stream.binomial(slots - len(occupied_slots), heads_probability))
    occupied = {tuple(int(value) for value in slot) for slot in occupied_slots}
    head_slots = _draw_heads(heads, label_universe, grid_size, d, occupied, stream)

    all_slots = np.concatenate([occupied_slots, head_slots], axis=0)
    discrete_points = PointSet(
        dimension=d,
        boundary_mode=boundary_mode,
        coordinates=_cell_centers(all_slots[:, 1:], grid_size),
        labels=all_slots[:, 0],
        label_universe=label_universe,
    )
    r = mu_radius(n, d)
    subsets = enumerate_ball_subsets(discrete_points, r, k, metric)
    discrete = Formula.from_label_rows(n, k, discrete_points.labels[subsets], subsets, generator_record=record)

    collision_report = CollisionReport(
        extra_heads=heads,
        same_cell_duplicates=same_cell_duplicates,
        boundary_flip_pairs=_boundary_flips(points, _cell_centers(cells, grid_size), r, metric),
    )
    identical = continuous.has_same_clauses(discrete)
    if not identical:
        generator_logger.debug("Coupled formulas differ: %s", collision_report)
    return CoupledPair(
        continuous=continuous,
        discrete=discrete,
        identical=identical,
        collision_report=collision_report,
        heads_count=heads,
    )
