"""
The coarse model F~(n, r) and U(k), the minimal number of variables of an unsatisfiable k-CNF whose clauses have
pairwise distinct variable sets.
"""

import math
from typing import Optional

from geosat.models.analytic_values import AnalyticValue
from geosat.models.enums import ValueKind

#: the first moment search gives up beyond this many variables (it terminates far earlier for every k <= 12)
MAX_FIRST_MOMENT_VARIABLES = 10**6


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"k has to be >= 2 but was {k}")


def u_k_bound(k: int) -> AnalyticValue:
    """
    (ln 2)^(1/(k-1)) (2k)^(k/(k-1)), an upper bound on U(k)
    """
    _check_k(k)
    value = math.log(2) ** (1 / (k - 1)) * (2 * k) ** (k / (k - 1))
    return AnalyticValue(value=value, kind=ValueKind.UPPER_BOUND, formula_id="u_k_bound")


def _log_expected_satisfying_assignments(u: int, k: int) -> float:
    return u * math.log(2) + math.comb(u, k) * math.log1p(-(2.0**-k))


def expected_satisfying_assignments(u: int, k: int) -> AnalyticValue:
    """
    2^u (1 - 2^-k)^C(u,k): the expected number of satisfying assignments if every k-set of the u variables carries
    one clause with uniformly random signs
    """
    _check_k(k)
    if u < k:
        raise ValueError(f"Need at least k={k} variables but u was {u}")
    value = math.exp(_log_expected_satisfying_assignments(u, k))
    return AnalyticValue(value=value, kind=ValueKind.EXACT, formula_id="expected_satisfying_assignments")


def u_k_first_moment_bound(k: int) -> AnalyticValue:
    """
    the smallest u >= k for which the expected number of satisfying assignments drops below 1. Then some sign choice
    is unsatisfiable, so U(k) <= u.
    """
    _check_k(k)
    for u in range(k, MAX_FIRST_MOMENT_VARIABLES):
        if _log_expected_satisfying_assignments(u, k) < 0:
            return AnalyticValue(value=u, kind=ValueKind.UPPER_BOUND, formula_id="u_k_first_moment_bound")
    raise ValueError(f"No bound below {MAX_FIRST_MOMENT_VARIABLES} variables found for k={k}")


def coarse_radius(k: int, d: int, gamma: float, n: int, u_k: Optional[int] = None) -> AnalyticValue:
    """
    r = gamma n^(-U/(d(U-1))), the radius scale of the coarse threshold of F~(n, r).
    Without an exact U(k) the ceiling of u_k_bound stands in for it. The exponent tends to 1/d as U grows.
    """
    _check_k(k)
    if n < 1 or gamma <= 0:
        raise ValueError(f"Expected n >= 1 and gamma > 0 but got n={n} and gamma={gamma}")
    if u_k is None:
        u_value = math.ceil(u_k_bound(k).value)
        kind = ValueKind.LEADING_ORDER
    else:
        if u_k < 2:
            raise ValueError(f"U(k) has to be >= 2 but was {u_k}")
        u_value = u_k
        kind = ValueKind.EXACT
    exponent = u_value / (d * (u_value - 1))
    return AnalyticValue(value=gamma * n ** (-exponent), kind=kind, formula_id="coarse_radius")
