"""
instantiates a "global" logger for the Monte Carlo engine and contains the exceptions raised by experiments
"""

import logging

experiment_logger = logging.getLogger("geosat.experiments")
experiment_logger.setLevel(logging.DEBUG)


class TrialBudgetExceededError(RuntimeError):
    """
    Is raised when a batch would exceed the configured budget of n * trials.
    """

    def __init__(self, requested: int, budget: int):
        super().__init__(requested, budget)
        self.requested = requested
        self.budget = budget

    def __str__(self):
        return f"{self.__class__}: The batch needs n*trials={self.requested} but the budget is {self.budget}"


class NonBracketingIntervalError(ValueError):
    """
    Is raised when the estimated probabilities at both ends of a search interval lie on the same side of the target.
    """

    def __init__(self, low: float, high: float, p_low: float, p_high: float, target: float):
        """
        initialize the exception
        :param low: lower end of the interval
        :param high: upper end of the interval
        :param p_low: the estimated probability at low
        :param p_high: the estimated probability at high
        :param target: the probability that was searched for
        """
        super().__init__(low, high, p_low, p_high, target)
        self.low = low
        self.high = high
        self.p_low = p_low
        self.p_high = p_high
        self.target = target

    def __str__(self):
        return (
            f"{self.__class__}: The interval [{self.low}, {self.high}] does not bracket {self.target}; "
            f"the estimates are {self.p_low} and {self.p_high}"
        )


class DegenerateParametersError(ValueError):
    """
    Is raised when a verification would run outside of the regime in which its normal approximation holds.
    """

    def __init__(self, error_message: str, expected_value: float):
        super().__init__(error_message, expected_value)
        self.error_message = error_message
        self.expected_value = expected_value

    def __str__(self):
        return f"{self.__class__}: {self.error_message} (expected value {self.expected_value})"
