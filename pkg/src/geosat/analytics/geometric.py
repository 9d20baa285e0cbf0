"""
Probabilities and volumes of the underlying point geometry.
"""

import math

from geosat.models.analytic_values import AnalyticValue
from geosat.models.enums import BoundaryMode, Metric, ValueKind


def _interval_range_prob(k: int, rho: float) -> float:
    """
    the probability that k uniform points of [0,1] span an interval of length <= rho.
    Conditioning on the position of the smallest point x: k * integral of (min(x + rho, 1) - x)^(k-1) over x.
    """
    if rho >= 1:
        return 1.0
    return k * rho ** (k - 1) - (k - 1) * rho**k


def clique_prob(k: int, d: int, rho: float, boundary_mode: BoundaryMode = BoundaryMode.CUBE) -> AnalyticValue:
    """
    the probability that k independent uniform points of the unit cube (or torus) are pairwise within l_inf distance
    rho. The coordinates are independent, so this is the d-th power of the one dimensional probability.
    In the cube the value is exact. On the torus it is exact for k = 2 (min(1, 2 rho)) and k * rho^(k-1) is used as
    leading order for k >= 3.
    """
    if k < 2:
        raise ValueError(f"k has to be >= 2 but was {k}")
    if d < 1:
        raise ValueError(f"d has to be >= 1 but was {d}")
    if rho < 0:
        raise ValueError(f"rho must not be negative but was {rho}")
    kind = ValueKind.EXACT
    if boundary_mode == BoundaryMode.CUBE:
        per_coordinate = _interval_range_prob(k, rho)
    elif k == 2:
        per_coordinate = min(1.0, 2 * rho)
    else:
        per_coordinate = min(1.0, k * rho ** (k - 1))
        kind = ValueKind.LEADING_ORDER
    return AnalyticValue(value=per_coordinate**d, kind=kind, formula_id="clique_prob")


def ball_volume(d: int, metric: Metric = Metric.LINF) -> float:
    """
    V_d, the volume of the unit ball: 2^d for l_inf, pi^(d/2) / Gamma(d/2 + 1) for l_2
    """
    if d < 1:
        raise ValueError(f"d has to be >= 1 but was {d}")
    if metric == Metric.LINF:
        return 2.0**d
    return math.pi ** (d / 2) / math.gamma(d / 2 + 1)


def connectivity_radius(n: int, d: int, metric: Metric = Metric.LINF) -> AnalyticValue:
    """
    r_c = (ln n / (n V_d))^(1/d), where the random geometric graph on n points becomes connected
    """
    if n < 2:
        raise ValueError(f"The connectivity radius needs n >= 2 but n was {n}")
    value = (math.log(n) / (n * ball_volume(d, metric))) ** (1.0 / d)
    return AnalyticValue(value=value, kind=ValueKind.LEADING_ORDER, formula_id="connectivity_radius")
