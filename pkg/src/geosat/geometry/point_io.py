"""
Reading and writing point sets as CSV with the header label,x1,...,xd.
Coordinates are written in the shortest form that reads back as the same double, so a write followed by a read
reproduces every float exactly.
"""

import csv
from pathlib import Path
from typing import Optional, TextIO, Union

import numpy as np

from geosat.geometry import geometry_logger
from geosat.models.enums import BoundaryMode
from geosat.models.point_set import PointSet


def format_float(value: float) -> str:
    """the shortest representation that reads back as the same double"""
    return repr(float(value))


def write_point_set_csv(ps: PointSet, target: Union[Path, TextIO]) -> None:
    """
    writes the point set to the given path or open text stream
    """
    if isinstance(target, Path):
        with open(target, "w", encoding="utf-8", newline="") as csv_file:
            write_point_set_csv(ps, csv_file)
        return
    writer = csv.writer(target, lineterminator="\n")
    writer.writerow(["label"] + [f"x{axis + 1}" for axis in range(ps.dimension)])
    for label, coordinates in zip(ps.labels, ps.coordinates):
        writer.writerow([int(label)] + [format_float(value) for value in coordinates])
    geometry_logger.debug("Wrote %i points", len(ps))


def read_point_set_csv(
    source: Union[Path, TextIO],
    boundary_mode: BoundaryMode = BoundaryMode.CUBE,
    label_universe: Optional[int] = None,
) -> PointSet:
    """
    reads a point set; the label universe defaults to the largest label found (at least 1)
    :raises ValueError: if the header or a row is malformed
    """
    if isinstance(source, Path):
        with open(source, "r", encoding="utf-8", newline="") as csv_file:
            return read_point_set_csv(csv_file, boundary_mode, label_universe)
    reader = csv.reader(source)
    header = next(reader, None)
    if header is None or len(header) < 2 or header[0].strip() != "label":
        raise ValueError(f"Expected a header 'label,x1,...,xd' but got {header}")
    dimension = len(header) - 1
    labels = []
    rows = []
    for line_number, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != dimension + 1:
            raise ValueError(f"Line {line_number} has {len(row)} fields but the header has {dimension + 1}")
        labels.append(int(row[0]))
        rows.append([float(value) for value in row[1:]])
    label_array = np.array(labels, dtype=np.int64)
    return PointSet(
        dimension=dimension,
        boundary_mode=boundary_mode,
        coordinates=np.array(rows, dtype=np.float64).reshape(-1, dimension),
        labels=label_array,
        label_universe=label_universe or max(1, int(label_array.max(initial=1))),
    )
