"""
Substituting assignments into formulas and printing verdicts the way DIMACS solvers do.
"""

from typing import List, Optional, Sequence

import numpy as np

from geosat.models.enums import SatStatus
from geosat.models.formula import Formula
from geosat.models.sat_results import SatResult
from geosat.solvers import WitnessVerificationError


def literal_values(witness: Sequence[bool]) -> np.ndarray:
    """
    the truth value of every literal label (index 0 is unused): x_i -> witness[i-1], not x_i -> not witness[i-1]
    """
    values = np.asarray(witness, dtype=bool)
    result = np.zeros(2 * len(values) + 1, dtype=bool)
    result[1::2] = values
    result[2::2] = ~values
    return result


def first_violated_clause(formula: Formula, witness: Sequence[bool]) -> Optional[int]:
    """
    the index of the first clause the assignment does not satisfy, None if it satisfies all of them
    """
    if len(witness) != formula.n_vars:
        raise ValueError(f"The witness assigns {len(witness)} variables but the formula has {formula.n_vars}")
    if formula.clause_count == 0:
        return None
    satisfied = literal_values(witness)[formula.literal_labels].any(axis=1)
    violated = np.flatnonzero(~satisfied)
    return int(violated[0]) if violated.size else None


def verify_witness(formula: Formula, witness: Sequence[bool]) -> bool:
    """
    true iff the assignment satisfies every clause of the formula
    """
    return first_violated_clause(formula, witness) is None


def checked_sat_result(formula: Formula, witness: Sequence[bool], solver_name: str) -> SatResult:
    """
    wraps a witness into a SAT result after substituting it into the formula
    :raises WitnessVerificationError: if the witness violates a clause
    """
    violated = first_violated_clause(formula, witness)
    if violated is not None:
        raise WitnessVerificationError(solver_name, violated)
    return SatResult(status=SatStatus.SAT, witness=witness)


def format_dimacs_verdict(result: SatResult, literals_per_line: int = 10) -> str:
    """
    the solver output lines "s SATISFIABLE" plus "v ... 0" lines (or "s UNSATISFIABLE")
    """
    if not result.is_satisfiable:
        return "s UNSATISFIABLE\n"
    assert result.witness is not None
    values: List[str] = [str(index if value else -index) for index, value in enumerate(result.witness, start=1)]
    values.append("0")
    lines = ["s SATISFIABLE"]
    for start in range(0, len(values), literals_per_line):
        lines.append("v " + " ".join(values[start : start + literals_per_line]))
    return "\n".join(lines) + "\n"
