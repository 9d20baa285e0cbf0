"""
Enums used throughout the models, the solvers and the experiments.
"""

from enum import unique

from geosat import StrEnum


@unique
class Metric(StrEnum):
    """
    The distance used to decide whether points lie in a common ball.
    """

    LINF = "LINF"
    """
    the max norm; a ball of radius r is an axis parallel cube of side 2r. This is the default everywhere.
    """

    L2 = "L2"
    """
    the euclidean norm. For k >= 3 "k points in a ball" is read as "all pairwise distances <= r".
    """


@unique
class BoundaryMode(StrEnum):
    """
    How the unit cube treats its boundary.
    """

    CUBE = "CUBE"
    """
    plain [0,1]^d; points near the boundary have truncated neighbourhoods
    """

    TORUS = "TORUS"
    """
    periodic boundary; the per coordinate gap is min(|a-b|, 1-|a-b|) which makes clause probabilities exact
    """


@unique
class ModelKind(StrEnum):
    """
    The random objects that can be generated.
    """

    GAMMA = "GAMMA"  #: F_k(n, gamma): one point per literal, radius gamma * n^(-1/d)
    MU = "MU"  #: F_k(n, mu): one Poisson process of intensity mu per literal, radius n^(-1/d)
    TILDE = "TILDE"  #: F~(n, r): one point per variable, random signs per clause
    RGG_POISSON = "RGG_POISSON"  #: G_d(n, mu, r)
    RGG_FIXED = "RGG_FIXED"  #: G_d(n, r)

    def is_formula_model(self) -> bool:
        """
        returns true iff the model produces a k-CNF formula (and not a plain hypergraph)
        """
        return self in (ModelKind.GAMMA, ModelKind.MU, ModelKind.TILDE)


@unique
class Sign(StrEnum):
    """
    The sign of a literal.
    """

    POSITIVE = "POSITIVE"
    NEGATIVE = "NEGATIVE"


@unique
class SatStatus(StrEnum):
    """
    The verdict of a solver.
    """

    SAT = "SAT"
    UNSAT = "UNSAT"


@unique
class CertificateKind(StrEnum):
    """
    What kind of evidence backs an UNSAT verdict.
    """

    CONTRADICTORY_SCC = "CONTRADICTORY_SCC"
    """
    a variable whose positive and negative literal share one strongly connected component of the implication graph
    """

    EXHAUSTED_SEARCH = "EXHAUSTED_SEARCH"
    """
    the complete backtracking search found no assignment
    """


@unique
class ValueKind(StrEnum):
    """
    Tells how an analytic value relates to the true quantity. Tests pick their tolerances based on it.
    """

    EXACT = "EXACT"
    LEADING_ORDER = "LEADING_ORDER"  #: correct up to a factor (1+o(1)) as n grows
    UPPER_BOUND = "UPPER_BOUND"


@unique
class EventKind(StrEnum):
    """
    The per trial observable of an experiment.
    Boolean events yield True/False per trial, count events yield a non-negative integer.
    """

    SAT = "SAT"
    UNSAT = "UNSAT"
    CONNECTED = "CONNECTED"
    HAS_BICYCLE = "HAS_BICYCLE"  #: uses ExperimentConfig.event_argument as L_max
    SNAKE_COUNT = "SNAKE_COUNT"  #: uses ExperimentConfig.event_argument as snake length s
    CLAUSE_COUNT = "CLAUSE_COUNT"

    def is_boolean(self) -> bool:
        """
        returns true iff the event has a True/False outcome
        """
        return self in (EventKind.SAT, EventKind.UNSAT, EventKind.CONNECTED, EventKind.HAS_BICYCLE)


@unique
class SolverEngine(StrEnum):
    """
    Which solver decides satisfiability.
    """

    TWO_SAT = "2sat"  #: linear time implication graph algorithm, clause width 2 only
    COMPLETE = "complete"  #: backtracking with unit propagation, any clause width, limited number of variables
    AUTO = "auto"  #: TWO_SAT for k=2, COMPLETE otherwise
