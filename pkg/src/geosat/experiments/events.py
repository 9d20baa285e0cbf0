"""
Event evaluators turn one random formula or hypergraph into the outcome of a trial: 0/1 for boolean events or a count.
"""

import inspect
import logging
import re
from typing import Callable, Dict, Optional, Union

from geosat.models.enums import EventKind, SolverEngine
from geosat.models.formula import Formula, Hypergraph
from geosat.solvers.complete_solver import DEFAULT_VAR_LIMIT
from geosat.solvers.components import component_stats
from geosat.solvers.engine import solve
from geosat.solvers.patterns import count_snakes, has_bicycle

DrawnObject = Union[Formula, Hypergraph]

# pylint: disable=unused-argument


class EventEvaluator:
    """
    Evaluates the events of an experiment.
    Every method named "evaluate_<event>" (e.g. evaluate_has_bicycle) handles the EventKind of the same (upper case)
    name. It takes the drawn object and the optional event argument and returns an integer.
    """

    _evaluation_method_name_pattern = re.compile(r"^evaluate_(?P<event>[a-z_]+)$")

    def __init__(self, engine: SolverEngine = SolverEngine.AUTO, var_limit: int = DEFAULT_VAR_LIMIT):
        """
        collects the evaluation methods defined in the (child) class
        :param engine: the solver used for SAT/UNSAT
        :param var_limit: the variable limit of the complete solver
        """
        self.engine = engine
        self.var_limit = var_limit
        self._evaluation_methods: Dict[EventKind, Callable[[DrawnObject, Optional[int]], int]] = {}
        self.logger: logging.Logger = logging.getLogger(self.__module__)
        for name, method in inspect.getmembers(self, inspect.ismethod):
            match = EventEvaluator._evaluation_method_name_pattern.match(name)
            if match:
                self._evaluation_methods[EventKind(match.groupdict()["event"].upper())] = method
        self.logger.info(
            "Instantiated %s and found %i evaluation methods", self.__class__.__name__, len(self._evaluation_methods)
        )

    def get_evaluation_method(self, event: EventKind) -> Optional[Callable[[DrawnObject, Optional[int]], int]]:
        """
        returns the method that evaluates the event; None if there is none
        """
        return self._evaluation_methods.get(event)

    def evaluate(self, event: EventKind, drawn: DrawnObject, event_argument: Optional[int] = None) -> int:
        """
        evaluates the event on a drawn formula or hypergraph
        :raises NotImplementedError: if no method handles the event
        """
        method = self.get_evaluation_method(event)
        if method is None:
            raise NotImplementedError(f"There is no evaluation method for the event '{event}'")
        return method(drawn, event_argument)

    @staticmethod
    def _formula(drawn: DrawnObject) -> Formula:
        if not isinstance(drawn, Formula):
            raise ValueError(f"The event needs a formula but got a {drawn.__class__.__name__}")
        return drawn

    @staticmethod
    def _required_argument(event_argument: Optional[int], name: str) -> int:
        if event_argument is None:
            raise ValueError(f"The event needs the argument {name}")
        return event_argument

    def evaluate_sat(self, drawn: DrawnObject, event_argument: Optional[int]) -> int:
        """1 iff the formula is satisfiable"""
        return int(solve(self._formula(drawn), self.engine, self.var_limit).is_satisfiable)

    def evaluate_unsat(self, drawn: DrawnObject, event_argument: Optional[int]) -> int:
        """1 iff the formula is unsatisfiable"""
        return 1 - self.evaluate_sat(drawn, event_argument)

    def evaluate_connected(self, drawn: DrawnObject, event_argument: Optional[int]) -> int:
        """1 iff the hypergraph is connected"""
        if not isinstance(drawn, Hypergraph):
            raise ValueError(f"Connectivity is evaluated on hypergraphs but got a {drawn.__class__.__name__}")
        return int(component_stats(drawn).is_connected)

    def evaluate_has_bicycle(self, drawn: DrawnObject, event_argument: Optional[int]) -> int:
        """1 iff the 2-CNF contains a bicycle of length at most L_max"""
        return int(has_bicycle(self._formula(drawn), self._required_argument(event_argument, "L_max")))

    def evaluate_snake_count(self, drawn: DrawnObject, event_argument: Optional[int]) -> int:
        """the number of snakes of length s"""
        return count_snakes(self._formula(drawn), self._required_argument(event_argument, "s"))

    def evaluate_clause_count(self, drawn: DrawnObject, event_argument: Optional[int]) -> int:
        """the number of clauses (or hyperedges)"""
        if isinstance(drawn, Hypergraph):
            return drawn.edge_count
        return drawn.clause_count
