"""
Expected numbers of implication paths, snakes and bicycles in geometric random 2-SAT.
"""

import math

from geosat.analytics import UnsupportedModelError
from geosat.analytics.geometric import clique_prob
from geosat.generators.formulas import gamma_radius
from geosat.models.analytic_values import AnalyticValue, ModelParams
from geosat.models.enums import BoundaryMode, Metric, ModelKind, ValueKind


def _check_supported(p: ModelParams, formula_id: str) -> None:
    if p.model not in (ModelKind.GAMMA, ModelKind.MU):
        raise UnsupportedModelError(formula_id, p.model)
    if p.n < 1:
        raise ValueError(f"n has to be >= 1 but was {p.n}")


def _exact_snakes(p: ModelParams, s: int) -> AnalyticValue:
    if p.model != ModelKind.GAMMA or p.metric != Metric.LINF:
        raise UnsupportedModelError("expected_snakes_exact", f"{p.model}/{p.metric}")
    if s > p.n:
        return AnalyticValue(value=0.0, kind=ValueKind.EXACT, formula_id="expected_snakes_exact")
    clause_prob = clique_prob(2, p.d, gamma_radius(p.n, p.d, p.param), p.boundary_mode).value
    sequences = math.comb(p.n, s) * math.factorial(s) * 2**s
    # the s+1 clauses form a forest on the literal points, so on the torus their appearances are independent
    kind = ValueKind.EXACT if p.boundary_mode == BoundaryMode.TORUS else ValueKind.LEADING_ORDER
    return AnalyticValue(value=sequences * clause_prob ** (s + 1), kind=kind, formula_id="expected_snakes_exact")


def expected_snakes(p: ModelParams, s: int, exact: bool = False) -> AnalyticValue:
    """
    E X_s, the expected number of snakes of length s (counted as ordered literal sequences, like count_snakes does).
    GAMMA: (2n)^s ((2 gamma)^d / n)^(s+1); MU: 2^(2d+1) (mu + mu^2)^2 / n * (2^(d+1) mu^2)^(s-1).
    The exact variant C(n,s) s! 2^s p^(s+1) with p = clique_prob(2, d, gamma n^(-1/d)) is available for GAMMA.
    :raises UnsupportedModelError: for even s, other models or the exact variant of MU
    """
    if s < 1 or s % 2 == 0:
        raise UnsupportedModelError("expected_snakes", f"snake length {s}")
    _check_supported(p, "expected_snakes")
    if exact:
        return _exact_snakes(p, s)
    if p.model == ModelKind.GAMMA:
        value = (2 * p.n) ** s * ((2 * p.param) ** p.d / p.n) ** (s + 1)
    else:
        mu = p.param
        value = 2 ** (2 * p.d + 1) * (mu + mu**2) ** 2 / p.n * (2 ** (p.d + 1) * mu**2) ** (s - 1)
    return AnalyticValue(value=value, kind=ValueKind.LEADING_ORDER, formula_id="expected_snakes")


def expected_paths(p: ModelParams, length: int) -> AnalyticValue:
    """
    the expected number of implication paths w_1 -> ... -> w_L: 2n (2 (2 gamma)^d)^(L-1) for GAMMA and
    2n (2^(d+1) mu^2)^(L-1) for MU. At the 2-SAT threshold the base is 1.
    """
    if length < 1:
        raise ValueError(f"The path length has to be >= 1 but was {length}")
    _check_supported(p, "expected_paths")
    if p.model == ModelKind.GAMMA:
        base = 2 * (2 * p.param) ** p.d
    else:
        base = 2 ** (p.d + 1) * p.param**2
    value = 2 * p.n * base ** (length - 1)
    return AnalyticValue(value=value, kind=ValueKind.LEADING_ORDER, formula_id="expected_paths")


def bicycle_bound(p: ModelParams, length: int) -> AnalyticValue:
    """
    an upper bound on the expected number of bicycles of length L: n^L 2^L (2L)^2 choices of the literals times the
    probability of the L+1 clauses, (mu^2 + 3 mu + 1)/mu^2 (2^d mu^2/n)^(L+1) for MU and ((2 gamma)^d/n)^(L+1) for GAMMA
    """
    if length < 1:
        raise ValueError(f"The bicycle length has to be >= 1 but was {length}")
    _check_supported(p, "bicycle_bound")
    choices = p.n**length * 2**length * (2 * length) ** 2
    if p.model == ModelKind.GAMMA:
        probability = ((2 * p.param) ** p.d / p.n) ** (length + 1)
    else:
        mu = p.param
        if mu == 0:
            return AnalyticValue(value=0.0, kind=ValueKind.UPPER_BOUND, formula_id="bicycle_bound")
        probability = (mu**2 + 3 * mu + 1) / mu**2 * (2**p.d * mu**2 / p.n) ** (length + 1)
    return AnalyticValue(value=choices * probability, kind=ValueKind.UPPER_BOUND, formula_id="bicycle_bound")
