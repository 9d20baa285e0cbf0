"""
instantiates a "global" logger for the solvers and contains their exceptions
"""

import logging

solver_logger = logging.getLogger("geosat.solvers")
solver_logger.setLevel(logging.DEBUG)


class UnsupportedFormulaError(ValueError):
    """
    Is raised when a solver or a pattern counter is called with a formula (or an argument) it does not support,
    e.g. a 3-CNF handed to the 2-SAT solver or an even snake length.
    """

    def __init__(self, error_message: str):
        super().__init__(error_message)
        self.error_message = error_message

    def __str__(self):
        return f"{self.__class__}: {self.error_message}"


class VariableLimitExceededError(ValueError):
    """
    Is raised when the complete solver is asked to decide a formula with more variables than it is allowed to.
    """

    def __init__(self, n_vars: int, var_limit: int):
        super().__init__(n_vars, var_limit)
        self.n_vars = n_vars
        self.var_limit = var_limit

    def __str__(self):
        return f"{self.__class__}: The formula has {self.n_vars} variables but the limit is {self.var_limit}"


class WitnessVerificationError(AssertionError):
    """
    Is raised when an assignment that a solver returned as witness does not satisfy the formula.
    This indicates a bug in the solver.
    """

    def __init__(self, solver_name: str, violated_clause_index: int):
        super().__init__(solver_name, violated_clause_index)
        self.solver_name = solver_name
        self.violated_clause_index = violated_clause_index

    def __str__(self):
        return (
            f"{self.__class__}: The witness of {self.solver_name} violates clause number {self.violated_clause_index}"
        )
