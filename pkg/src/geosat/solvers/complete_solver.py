"""
A complete backtracking solver for k-CNFs with few variables (DPLL with unit propagation and pure literal elimination).
It is the reference the faster solvers and the acceptance tests are checked against.
"""

from collections import Counter
from typing import Dict, List, Optional, Tuple

from geosat.models.enums import CertificateKind, SatStatus
from geosat.models.formula import Formula
from geosat.models.sat_results import SatCertificate, SatResult
from geosat.solvers import VariableLimitExceededError, solver_logger
from geosat.solvers.witness import checked_sat_result

DEFAULT_VAR_LIMIT = 40

Clauses = List[Tuple[int, ...]]


def _normalized_clauses(f: Formula) -> Clauses:
    """distinct clauses as tuples of distinct DIMACS literals; tautologies are dropped"""
    result = set()
    for row in f.dimacs_rows().tolist():
        literals = frozenset(row)
        if any(-literal in literals for literal in literals):
            continue
        result.add(tuple(sorted(literals, key=lambda literal: (abs(literal), literal))))
    return sorted(result)


def _assign(clauses: Clauses, literal: int) -> Optional[Clauses]:
    """sets literal true; returns None if a clause becomes empty"""
    result: Clauses = []
    for clause in clauses:
        if literal in clause:
            continue
        if -literal in clause:
            reduced = tuple(other for other in clause if other != -literal)
            if not reduced:
                return None
            result.append(reduced)
        else:
            result.append(clause)
    return result


def _branching_literal(clauses: Clauses) -> int:
    """the most frequent literal among the shortest clauses (ties: lowest variable, positive first)"""
    occurrences = Counter(literal for clause in clauses for literal in clause)
    shortest = min(len(clause) for clause in clauses)
    candidates = {literal for clause in clauses if len(clause) == shortest for literal in clause}
    return min(candidates, key=lambda literal: (-occurrences[literal], abs(literal), -literal))


def _dpll(clauses: Optional[Clauses], assignment: Dict[int, bool]) -> Optional[Dict[int, bool]]:
    while True:
        if clauses is None:
            return None
        if not clauses:
            return assignment
        unit = next((clause[0] for clause in clauses if len(clause) == 1), None)
        if unit is not None:
            assignment[abs(unit)] = unit > 0
            clauses = _assign(clauses, unit)
            continue
        literals = {literal for clause in clauses for literal in clause}
        pure_literals = sorted(literal for literal in literals if -literal not in literals)
        if not pure_literals:
            break
        for literal in pure_literals:
            assignment[abs(literal)] = literal > 0
        pure = set(pure_literals)
        clauses = [clause for clause in clauses if pure.isdisjoint(clause)]
    literal = _branching_literal(clauses)
    for choice in (literal, -literal):
        result = _dpll(_assign(clauses, choice), {**assignment, abs(choice): choice > 0})
        if result is not None:
            return result
    return None


def solve_ksat_complete(f: Formula, var_limit: int = DEFAULT_VAR_LIMIT) -> SatResult:
    """
    decides a k-CNF exactly
    :param f: any formula with at most var_limit variables
    :param var_limit: guards against exponential running times
    :raises VariableLimitExceededError: if f has more than var_limit variables
    """
    if f.n_vars > var_limit:
        raise VariableLimitExceededError(f.n_vars, var_limit)
    assignment = _dpll(_normalized_clauses(f), {})
    if assignment is None:
        solver_logger.debug("The search over %i variables found no satisfying assignment", f.n_vars)
        return SatResult(status=SatStatus.UNSAT, certificate=SatCertificate(kind=CertificateKind.EXHAUSTED_SEARCH))
    witness = [assignment.get(variable, False) for variable in range(1, f.n_vars + 1)]
    return checked_sat_result(f, witness, "solve_ksat_complete")
