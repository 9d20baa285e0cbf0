"""
Clause counts and satisfiability thresholds of F_k(n, gamma) and F_k(n, mu).
"""

import math
from typing import Tuple

from scipy import stats

from geosat.analytics import UnsupportedModelError, analytics_logger
from geosat.analytics.geometric import clique_prob
from geosat.generators.formulas import gamma_radius, mu_radius
from geosat.models.analytic_values import AnalyticValue, ModelParams
from geosat.models.enums import Metric, ModelKind, ValueKind


def _leading_order_clauses(p: ModelParams) -> float:
    if p.model == ModelKind.GAMMA:
        return 2**p.k * p.param ** (p.d * (p.k - 1)) * p.k**p.d / math.factorial(p.k) * p.n
    return (2 * p.param) ** p.k * p.k**p.d / math.factorial(p.k) * p.n


def _exact_clauses(p: ModelParams) -> AnalyticValue:
    if p.metric != Metric.LINF:
        raise UnsupportedModelError("expected_clauses_exact", p.metric)
    if p.model == ModelKind.GAMMA:
        subsets = math.comb(2 * p.n, p.k)
        probability = clique_prob(p.k, p.d, gamma_radius(p.n, p.d, p.param), p.boundary_mode)
    else:
        # E[C(N, k)] = lambda^k / k! for N ~ Poisson(lambda)
        subsets = (2 * p.param * p.n) ** p.k / math.factorial(p.k)
        probability = clique_prob(p.k, p.d, mu_radius(p.n, p.d), p.boundary_mode)
    return AnalyticValue(value=subsets * probability.value, kind=probability.kind, formula_id="expected_clauses_exact")


def expected_clauses(p: ModelParams, exact: bool = False) -> AnalyticValue:
    """
    the expected number of clauses.
    Leading order: (2^k gamma^(d(k-1)) k^d / k!) n for GAMMA and ((2 mu)^k k^d / k!) n for MU.
    The exact variant multiplies the (expected) number of k-subsets of points with clique_prob; it is only available
    for the l_inf metric.
    :raises UnsupportedModelError: for models other than GAMMA and MU
    """
    if p.model not in (ModelKind.GAMMA, ModelKind.MU):
        raise UnsupportedModelError("expected_clauses", p.model)
    if exact:
        return _exact_clauses(p)
    return AnalyticValue(value=_leading_order_clauses(p), kind=ValueKind.LEADING_ORDER, formula_id="expected_clauses")


def threshold_2sat(model: ModelKind, d: int) -> AnalyticValue:
    """
    the satisfiability threshold of the geometric 2-SAT models: gamma* = 2^-(1+1/d) and mu* = 2^-((d+1)/2)
    """
    if d < 1:
        raise ValueError(f"d has to be >= 1 but was {d}")
    if model == ModelKind.GAMMA:
        value = 2.0 ** (-(1 + 1 / d))
    elif model == ModelKind.MU:
        value = 2.0 ** (-(d + 1) / 2)
    else:
        raise UnsupportedModelError("threshold_2sat", model)
    return AnalyticValue(value=value, kind=ValueKind.EXACT, formula_id="threshold_2sat")


def ksat_bounds(k: int, d: int, model: ModelKind) -> Tuple[AnalyticValue, AnalyticValue]:
    """
    (lower, upper) bounds on the k-SAT threshold for k >= 3.
    The 2-SAT threshold is a lower bound because every k-clause contains a 2-clause. The upper bounds are
    (k-1)^(1/d) for GAMMA (pigeonhole) and k + ln 2 for MU.
    """
    if k < 3:
        raise ValueError(f"The k-SAT bounds need k >= 3 but k was {k}")
    lower = threshold_2sat(model, d)
    if model == ModelKind.GAMMA:
        upper = (k - 1) ** (1.0 / d)
    else:
        upper = k + math.log(2)
    return (
        AnalyticValue(value=lower.value, kind=ValueKind.EXACT, formula_id="ksat_lower_bound"),
        AnalyticValue(value=upper, kind=ValueKind.UPPER_BOUND, formula_id="ksat_upper_bound"),
    )


def pigeonhole_box_count(n: int, d: int, gamma: float) -> int:
    """
    the number of boxes of side at most r = gamma n^(-1/d) that tile the unit cube: ceil(n^(1/d) / gamma)^d
    """
    if n < 1 or gamma <= 0:
        raise ValueError(f"Expected n >= 1 and gamma > 0 but got n={n} and gamma={gamma}")
    per_axis = math.ceil(round(n ** (1.0 / d) / gamma, 12))
    return per_axis**d


def pigeonhole_forces_unsat(n: int, k: int, d: int, gamma: float) -> bool:
    """
    true if every realization of F_k(n, gamma) is unsatisfiable.
    Whatever the assignment, its n false literals fall into fewer than n/(k-1) boxes, so one box holds k of them.
    Points in one box are pairwise within r and hence form a clause that the assignment violates.
    """
    boxes = pigeonhole_box_count(n, d, gamma)
    forced = boxes * (k - 1) < n
    analytics_logger.debug("%i boxes for n=%i, k=%i: pigeonhole forces UNSAT: %s", boxes, n, k, forced)
    return forced


def poisson_below_k_probability(k: int, mu: float) -> float:
    """
    Pr[Poisson(mu) < k]; it drops below 1/2 once mu exceeds k + ln 2
    """
    if mu < 0:
        raise ValueError(f"mu must not be negative but was {mu}")
    return float(stats.poisson.cdf(k - 1, mu))
