"""
Picks the solver for a formula.
"""

from geosat.models.enums import SolverEngine
from geosat.models.formula import Formula
from geosat.models.sat_results import SatResult
from geosat.solvers.complete_solver import DEFAULT_VAR_LIMIT, solve_ksat_complete
from geosat.solvers.two_sat import solve_2sat


def solve(f: Formula, engine: SolverEngine = SolverEngine.AUTO, var_limit: int = DEFAULT_VAR_LIMIT) -> SatResult:
    """
    decides the formula with the requested engine; AUTO uses the 2-SAT solver for k=2 and the complete solver otherwise
    """
    if engine == SolverEngine.TWO_SAT or (engine == SolverEngine.AUTO and f.k == 2):
        return solve_2sat(f)
    return solve_ksat_complete(f, var_limit)
