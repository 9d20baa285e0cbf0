"""
The implication graph of a 2-CNF and its strongly connected components.

The vertices are the literal labels 1..2n. A clause (a or b) contributes the arcs -a -> b and -b -> a and nothing
else; the arc set is therefore closed under u -> v implies -v -> -u. A tautology (x or -x) yields the self-loops
x -> x and -x -> -x, a clause (l or l) the single arc -l -> l.
"""

from typing import List

import attrs
import numpy as np

from geosat.models.formula import Formula, negate_labels
from geosat.solvers import UnsupportedFormulaError, solver_logger


@attrs.frozen(kw_only=True)
class ImplicationGraph:
    """
    A directed graph on the 2n literal labels, stored as a sorted arc list plus a compressed adjacency index.
    """

    n_vars: int = attrs.field(validator=attrs.validators.ge(0))
    #: (a, 2) array of distinct (source, target) label pairs in lexicographic order
    arcs: np.ndarray = attrs.field(
        converter=lambda value: np.asarray(value, dtype=np.int64).reshape(-1, 2),
        eq=attrs.cmp_using(eq=np.array_equal),
    )
    #: successors of label v are arcs[offsets[v]:offsets[v+1], 1]
    offsets: np.ndarray = attrs.field(init=False, eq=False)

    def __attrs_post_init__(self) -> None:
        offsets = np.searchsorted(self.arcs[:, 0], np.arange(2 * self.n_vars + 2), side="left")
        object.__setattr__(self, "offsets", offsets)

    @property
    def vertex_count(self) -> int:
        """2n"""
        return 2 * self.n_vars

    @property
    def arc_count(self) -> int:
        """number of distinct arcs"""
        return int(self.arcs.shape[0])

    def successors(self, label: int) -> np.ndarray:
        """the (sorted) labels that label points to"""
        return self.arcs[self.offsets[label] : self.offsets[label + 1], 1]

    def has_arc(self, source: int, target: int) -> bool:
        """true iff source -> target is an arc"""
        successors = self.successors(source)
        position = np.searchsorted(successors, target)
        return bool(position < len(successors) and successors[position] == target)

    def successor_lists(self) -> List[List[int]]:
        """the adjacency as plain python lists, indexed by label (index 0 is empty)"""
        targets = self.arcs[:, 1].tolist()
        offsets = self.offsets.tolist()
        return [targets[offsets[label] : offsets[label + 1]] for label in range(2 * self.n_vars + 1)]


def build_implication_graph(f: Formula) -> ImplicationGraph:
    """
    builds the implication graph of a 2-CNF; repeated clauses contribute their arcs only once
    :raises UnsupportedFormulaError: if the clauses do not have width 2
    """
    if f.k != 2:
        raise UnsupportedFormulaError(f"The implication graph is only defined for 2-CNFs but k was {f.k}")
    rows = f.unique_label_rows()
    if rows.shape[0] == 0:
        arcs = np.empty((0, 2), dtype=np.int64)
    else:
        first, second = rows[:, 0], rows[:, 1]
        arcs = np.concatenate(
            [np.stack([negate_labels(first), second], axis=1), np.stack([negate_labels(second), first], axis=1)]
        )
        arcs = np.unique(arcs, axis=0)
    return ImplicationGraph(n_vars=f.n_vars, arcs=arcs)


# pylint:disable=too-many-locals
def strongly_connected_components(graph: ImplicationGraph) -> np.ndarray:
    """
    labels the strongly connected components with Tarjan's algorithm (iterative, so deep graphs do not hit the
    recursion limit). The vertices are visited in increasing label order.
    Components are numbered in the order in which they are completed, which is a reverse topological order: if there
    is a path from u to v, then component[u] >= component[v].
    :return: an array with one component number per label; index 0 is unused and holds -1
    """
    size = 2 * graph.n_vars + 1
    successors = graph.successor_lists()
    index: List[int] = [-1] * size
    low: List[int] = [0] * size
    on_stack: List[bool] = [False] * size
    component: List[int] = [-1] * size
    stack: List[int] = []
    counter = 0
    component_count = 0
    for root in range(1, size):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]
        while work:
            vertex, position = work[-1]
            if position < len(successors[vertex]):
                work[-1] = (vertex, position + 1)
                successor = successors[vertex][position]
                if index[successor] == -1:
                    index[successor] = low[successor] = counter
                    counter += 1
                    stack.append(successor)
                    on_stack[successor] = True
                    work.append((successor, 0))
                elif on_stack[successor]:
                    low[vertex] = min(low[vertex], index[successor])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[vertex])
            if low[vertex] == index[vertex]:
                while True:
                    member = stack.pop()
                    on_stack[member] = False
                    component[member] = component_count
                    if member == vertex:
                        break
                component_count += 1
    solver_logger.debug("The implication graph on %i literals has %i components", size - 1, component_count)
    return np.array(component, dtype=np.int64)
