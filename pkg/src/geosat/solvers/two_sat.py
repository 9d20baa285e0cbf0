"""
Linear time 2-SAT: a 2-CNF is unsatisfiable iff some variable shares a strongly connected component of the implication
graph with its negation. Otherwise x_i is set true iff the component of x_i comes before the component of -x_i in
the reverse topological numbering.
"""

import numpy as np

from geosat.models.enums import CertificateKind, SatStatus
from geosat.models.formula import Formula
from geosat.models.sat_results import SatCertificate, SatResult
from geosat.solvers import UnsupportedFormulaError, solver_logger
from geosat.solvers.implication_graph import build_implication_graph, strongly_connected_components
from geosat.solvers.witness import checked_sat_result


def contradictory_variables(components: np.ndarray) -> np.ndarray:
    """the (1-based, increasing) variables whose two literals lie in one component"""
    return np.flatnonzero(components[1::2] == components[2::2]) + 1


def solve_2sat(f: Formula) -> SatResult:
    """
    decides a 2-CNF
    :return: SAT with a verified witness, or UNSAT with the lowest contradictory variable as certificate
    :raises UnsupportedFormulaError: if k != 2
    """
    if f.k != 2:
        raise UnsupportedFormulaError(f"The 2-SAT solver needs clauses of width 2 but k was {f.k}")
    components = strongly_connected_components(build_implication_graph(f))
    contradictions = contradictory_variables(components)
    if contradictions.size:
        solver_logger.debug("x%i and its negation share a strongly connected component", contradictions[0])
        return SatResult(
            status=SatStatus.UNSAT,
            certificate=SatCertificate(kind=CertificateKind.CONTRADICTORY_SCC, variable=int(contradictions[0])),
        )
    witness = components[1::2] < components[2::2]
    return checked_sat_result(f, witness.tolist(), "solve_2sat")
