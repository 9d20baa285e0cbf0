"""
instantiates a "global" logger for everything related to points, distances and the grid index
"""

import logging

geometry_logger = logging.getLogger("geosat.geometry")
geometry_logger.setLevel(logging.DEBUG)


class DimensionMismatchError(ValueError):
    """
    Is raised when two points (or a point and a point set) of different dimension are compared.
    """

    def __init__(self, expected_dimension: int, actual_dimension: int):
        """
        initialize the exception
        :param expected_dimension: the dimension of the first operand
        :param actual_dimension: the dimension of the second operand
        """
        super().__init__(expected_dimension, actual_dimension)
        self.expected_dimension = expected_dimension
        self.actual_dimension = actual_dimension

    def __str__(self):
        return (
            f"{self.__class__}: Cannot compare a {self.expected_dimension}-dimensional with a "
            f"{self.actual_dimension}-dimensional point"
        )
