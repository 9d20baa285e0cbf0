"""
Process wide settings of the experiment engine.
"""

import os
from typing import Mapping, Optional

import attrs

BUDGET_ENVIRONMENT_VARIABLE = "GEOSAT_BUDGET"
DEFAULT_TRIAL_BUDGET = 2 * 10**9


@attrs.frozen(kw_only=True)
class ExperimentSettings:
    """
    Settings that apply to all experiments run in one process.
    """

    #: ceiling on n * trials for a single batch
    trial_budget: int = attrs.field(
        default=DEFAULT_TRIAL_BUDGET, converter=int, validator=attrs.validators.gt(0)
    )
    jobs: int = attrs.field(default=1, validator=[attrs.validators.instance_of(int), attrs.validators.ge(1)])
    complete_solver_var_limit: int = attrs.field(default=40, validator=attrs.validators.ge(1))

    @classmethod
    def from_environment(cls, environment: Optional[Mapping[str, str]] = None) -> "ExperimentSettings":
        """
        reads the trial budget from GEOSAT_BUDGET (if set); everything else keeps its default
        """
        if environment is None:
            environment = os.environ
        raw_budget = environment.get(BUDGET_ENVIRONMENT_VARIABLE)
        if raw_budget is None or not raw_budget.strip():
            return cls()
        try:
            budget = int(float(raw_budget))
        except ValueError as value_error:
            raise ValueError(
                f"{BUDGET_ENVIRONMENT_VARIABLE} has to be a number but was '{raw_budget}'"
            ) from value_error
        return cls(trial_budget=budget)
