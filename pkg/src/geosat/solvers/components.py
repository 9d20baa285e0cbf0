"""
Connected components of (hyper)graphs via scipy's sparse graph routines.
"""

from typing import NamedTuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from geosat.models.formula import Hypergraph


class ComponentStats(NamedTuple):
    """
    component_count, largest_size, is_connected.
    A graph without vertices has no components and counts as not connected.
    """

    component_count: int
    largest_size: int
    is_connected: bool


def component_labels(g: Hypergraph) -> np.ndarray:
    """
    the component number of every vertex; the vertices of a hyperedge are all connected to each other
    """
    if g.edge_count == 0:
        return np.arange(g.vertex_count, dtype=np.int64)
    # a hyperedge is connected iff its consecutive vertices are
    sources = g.edges[:, :-1].ravel()
    targets = g.edges[:, 1:].ravel()
    adjacency = coo_matrix(
        (np.ones(len(sources), dtype=bool), (sources, targets)), shape=(g.vertex_count, g.vertex_count)
    )
    _, labels = connected_components(adjacency.tocsr(), directed=False)
    return labels.astype(np.int64)


def component_stats(g: Hypergraph) -> ComponentStats:
    """
    number of components, size of the largest one and whether the graph is connected
    """
    if g.vertex_count == 0:
        return ComponentStats(0, 0, False)
    sizes = np.bincount(component_labels(g))
    return ComponentStats(int(len(sizes)), int(sizes.max()), bool(len(sizes) == 1))
