"""
instantiates a "global" logger for the random generators and contains their exceptions
"""

import logging
from typing import Optional

generator_logger = logging.getLogger("geosat.generators")
generator_logger.setLevel(logging.DEBUG)


class CouplingRangeError(OverflowError):
    """
    Is raised when the grid of the discrete coupling is too fine for exact integer or float arithmetic.
    """

    def __init__(self, n: int, d: int, grid_size: int, reason: str):
        super().__init__(n, d, grid_size, reason)
        self.n = n
        self.d = d
        self.grid_size = grid_size
        self.reason = reason

    def __str__(self):
        return (
            f"{self.__class__}: The coupling grid N={self.grid_size} for n={self.n}, d={self.d} is too large: "
            f"{self.reason}"
        )


class DimacsFormatError(SyntaxError):
    """
    Is raised when a DIMACS CNF text cannot be parsed or contradicts its own header.
    """

    def __init__(self, error_message: str, line: Optional[int] = None):
        """
        initialize the exception
        :param error_message: what is wrong
        :param line: the (1-based) line number, if known
        """
        super().__init__(error_message)
        self.error_message = error_message
        self.line = line

    def __str__(self):
        if self.line is None:
            return f"{self.__class__}: Invalid DIMACS input: {self.error_message}"
        return f"{self.__class__}: Invalid DIMACS input in line {self.line}: {self.error_message}"
