"""
Projects a k-CNF onto the 2-CNF of all 2-subclauses. Every 2-subclause implies its k-clause, so a satisfying
assignment of the projection also satisfies the original formula.
"""

import itertools

import numpy as np

from geosat.models.formula import Formula
from geosat.solvers import UnsupportedFormulaError


def project_to_2sat(f: Formula) -> Formula:
    """
    replaces every k-clause by its C(k,2) 2-subclauses (clause by clause, in the order of the column pairs);
    each subclause inherits the provenance of the two literals it consists of
    :raises UnsupportedFormulaError: if k < 3
    """
    if f.k < 3:
        raise UnsupportedFormulaError(f"Only formulas with k >= 3 can be projected but k was {f.k}")
    column_pairs = np.array(list(itertools.combinations(range(f.k), 2)), dtype=np.int64)
    rows = f.literal_labels[:, column_pairs].reshape(-1, 2)
    provenance = f.provenance[:, column_pairs].reshape(-1, 2)
    return Formula.from_label_rows(f.n_vars, 2, rows, provenance)
