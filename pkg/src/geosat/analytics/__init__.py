"""
Contains the closed form quantities of the random models. Every function returns an AnalyticValue whose kind tells
whether the number is exact, correct to leading order or an upper bound.
"""

import logging
from typing import Union

from geosat.models.enums import ModelKind

analytics_logger = logging.getLogger("geosat.analytics")
analytics_logger.setLevel(logging.DEBUG)


class UnsupportedModelError(ValueError):
    """
    Is raised when a closed form is requested for a model (or a moment order) it is not known for.
    """

    def __init__(self, formula_id: str, model: Union[ModelKind, str]):
        super().__init__(formula_id, model)
        self.formula_id = formula_id
        self.model = model

    def __str__(self):
        return f"{self.__class__}: '{self.formula_id}' is not available for '{self.model}'"
