"""
Poisson moments and the probabilities that a given set of 2-clauses appears in F_2(n, mu).

If the clauses form a tree on the literals, the probability is to leading order (2^d/n)^q * prod_i M_{d_i}(mu),
where q is the number of clauses, d_i the degree of the i-th literal of the tree and M_j the j-th Poisson moment:
a literal with N points and degree j contributes about N^j.
"""

import math
from typing import Sequence, Tuple

from geosat.analytics import UnsupportedModelError
from geosat.models.analytic_values import AnalyticValue
from geosat.models.enums import ValueKind

MAX_MOMENT_ORDER = 4


def _check_mu_and_n(mu: float, n: int) -> None:
    if mu < 0:
        raise ValueError(f"mu must not be negative but was {mu}")
    if n < 1:
        raise ValueError(f"n has to be >= 1 but was {n}")


def _raw_moment(mu: float, order: int) -> float:
    if order == 1:
        return mu
    if order == 2:
        return mu**2 + mu
    if order == 3:
        return mu**3 + 3 * mu**2 + mu
    if order == 4:
        return mu**4 + 6 * mu**3 + 7 * mu**2 + mu
    raise UnsupportedModelError("poisson_moment", f"order {order}")


def poisson_moment(mu: float, order: int) -> AnalyticValue:
    """
    E[N^order] for N ~ Poisson(mu), order 1 to 4
    :raises UnsupportedModelError: for other orders
    """
    if mu < 0:
        raise ValueError(f"mu must not be negative but was {mu}")
    return AnalyticValue(value=_raw_moment(mu, order), kind=ValueKind.EXACT, formula_id=f"poisson_moment:{order}")


def tree_clause_prob(degrees: Sequence[int], mu: float, d: int, n: int) -> AnalyticValue:
    """
    the probability that the 2-clauses of a tree on the literals all appear in F_2(n, mu)
    :param degrees: the degree of every literal of the tree (each 1..4); there are len(degrees) - 1 clauses
    """
    _check_mu_and_n(mu, n)
    if len(degrees) < 2 or sum(degrees) != 2 * (len(degrees) - 1):
        raise ValueError(f"The degrees {list(degrees)} do not belong to a tree")
    clause_count = len(degrees) - 1
    value = (2**d / n) ** clause_count * math.prod(_raw_moment(mu, degree) for degree in degrees)
    return AnalyticValue(value=value, kind=ValueKind.LEADING_ORDER, formula_id="tree_clause_prob")


def tree_clause_prob_bound(clause_count: int, mu: float, d: int, n: int) -> AnalyticValue:
    """
    (M_4)^2 (M_3)^4 (mu+1)^q (2^d mu^2 / n)^q bounds the probability of any tree of q clauses with at most two
    literals of degree 4 and at most four of degree 3
    """
    _check_mu_and_n(mu, n)
    value = (
        _raw_moment(mu, 4) ** 2
        * _raw_moment(mu, 3) ** 4
        * (mu + 1) ** clause_count
        * (2**d * mu**2 / n) ** clause_count
    )
    return AnalyticValue(value=value, kind=ValueKind.UPPER_BOUND, formula_id="tree_clause_prob_bound")


def wedge_prob(mu: float, d: int, n: int) -> AnalyticValue:
    """
    the probability of the two clauses (l1, l2) and (l1, l3): 2^(2d) mu^2 (mu + mu^2) / n^2
    """
    return AnalyticValue(
        value=tree_clause_prob([2, 1, 1], mu, d, n).value, kind=ValueKind.LEADING_ORDER, formula_id="wedge_prob"
    )


def triple_probs(mu: float, d: int, n: int) -> Tuple[AnalyticValue, AnalyticValue]:
    """
    the probabilities of three clauses that form a path (l1, l2), (l2, l3), (l3, l4) and of three clauses that form a
    star (l1, l2), (l1, l3), (l1, l4):
    2^(3d) mu^4 (mu+1)^2 / n^3 and 2^(3d) mu^4 (mu^2 + 3 mu + 1) / n^3
    """
    path = tree_clause_prob([1, 2, 2, 1], mu, d, n).value
    star = tree_clause_prob([3, 1, 1, 1], mu, d, n).value
    return (
        AnalyticValue(value=path, kind=ValueKind.LEADING_ORDER, formula_id="triple_path"),
        AnalyticValue(value=star, kind=ValueKind.LEADING_ORDER, formula_id="triple_star"),
    )
