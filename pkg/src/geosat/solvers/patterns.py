"""
Counts the bicycles and snakes of a 2-CNF.

Both patterns contain a chain of clauses (-w_1, w_2), (-w_2, w_3), ..., i.e. a path w_1 -> w_2 -> ... in the
implication graph whose literals belong to distinct variables. The search walks these paths depth first and only
checks the two closing clauses at the ends. Ordered sequences are counted, so a clause set that matches the pattern
in several orders is counted several times.

A bicycle of length L is (u, w_1), (-w_1, w_2), ..., (-w_{L-1}, w_L), (-w_L, v) with u, v from {w_i} and {-w_i}.
Every unsatisfiable 2-CNF contains one; the converse does not hold (e.g. u = w_1 together with the clause (w_1, w_1)
is no contradiction on its own).
A snake of odd length s = 2t-1 is (w_t, w_1), (-w_1, w_2), ..., (-w_{s-1}, w_s), (-w_s, -w_t). Every snake is
unsatisfiable.
"""

from typing import Dict, FrozenSet, Iterator, List, Set

from geosat.models.formula import Formula, LiteralId
from geosat.models.sat_results import Snake
from geosat.solvers import UnsupportedFormulaError
from geosat.solvers.implication_graph import build_implication_graph

MAX_BICYCLE_LENGTH = 12
MAX_SNAKE_LENGTH = 9


def _negation(label: int) -> int:
    return label + 1 if label % 2 == 1 else label - 1


def _variable(label: int) -> int:
    return (label + 1) // 2


def _partners(f: Formula) -> List[FrozenSet[int]]:
    """partners[a] holds every b for which the clause (a, b) is in the formula"""
    partners: List[Set[int]] = [set() for _ in range(2 * f.n_vars + 1)]
    for first, second in f.unique_label_rows().tolist():
        partners[first].add(second)
        partners[second].add(first)
    return [frozenset(labels) for labels in partners]


def _check_2cnf(f: Formula) -> None:
    if f.k != 2:
        raise UnsupportedFormulaError(f"Bicycles and snakes are only defined for 2-CNFs but k was {f.k}")


def _walk(successors: List[List[int]], max_length: int) -> Iterator[List[int]]:
    """
    yields every path with distinct variables of length 1..max_length (as the same, mutated list; copy to keep it)
    """
    path: List[int] = []
    used: Set[int] = set()

    def extend() -> Iterator[List[int]]:
        yield path
        if len(path) == max_length:
            return
        for successor in successors[path[-1]]:
            variable = _variable(successor)
            if variable in used:
                continue
            path.append(successor)
            used.add(variable)
            yield from extend()
            path.pop()
            used.remove(variable)

    for start in range(1, len(successors)):
        path.append(start)
        used.add(_variable(start))
        yield from extend()
        path.pop()
        used.clear()


def _endpoint_choices(path: List[int], partners: List[FrozenSet[int]]) -> int:
    """number of (u, v) that close the path to a bicycle"""
    candidates = set(path)
    candidates.update(_negation(label) for label in path)
    left = len(partners[path[0]] & candidates)
    if left == 0:
        return 0
    return left * len(partners[_negation(path[-1])] & candidates)


def _check_bicycle_length(l_max: int) -> None:
    if not 1 <= l_max <= MAX_BICYCLE_LENGTH:
        raise UnsupportedFormulaError(f"L_max has to be in 1..{MAX_BICYCLE_LENGTH} but was {l_max}")


def count_bicycles(f: Formula, l_max: int) -> Dict[int, int]:
    """
    counts the bicycles of every length L = 1..l_max
    :raises UnsupportedFormulaError: if k != 2 or l_max is outside of 1..12
    """
    _check_2cnf(f)
    _check_bicycle_length(l_max)
    counts = {length: 0 for length in range(1, l_max + 1)}
    partners = _partners(f)
    for path in _walk(build_implication_graph(f).successor_lists(), l_max):
        counts[len(path)] += _endpoint_choices(path, partners)
    return counts


def has_bicycle(f: Formula, l_max: int) -> bool:
    """true iff the formula contains a bicycle of length at most l_max (stops at the first one)"""
    _check_2cnf(f)
    _check_bicycle_length(l_max)
    partners = _partners(f)
    return any(
        _endpoint_choices(path, partners) > 0
        for path in _walk(build_implication_graph(f).successor_lists(), l_max)
    )


def _check_snake_length(s: int) -> None:
    if s % 2 == 0:
        raise UnsupportedFormulaError(f"Snakes have odd length but s was {s}")
    if not 1 <= s <= MAX_SNAKE_LENGTH:
        raise UnsupportedFormulaError(f"Snakes are counted for lengths 1..{MAX_SNAKE_LENGTH} but s was {s}")


def _snake_sequences(f: Formula, s: int) -> Iterator[List[int]]:
    partners = _partners(f)
    middle = (s - 1) // 2
    for path in _walk(build_implication_graph(f).successor_lists(), s):
        if len(path) != s:
            continue
        if path[0] in partners[path[middle]] and _negation(path[middle]) in partners[_negation(path[-1])]:
            yield path


def count_snakes(f: Formula, s: int) -> int:
    """
    counts the ordered literal sequences w_1..w_s (distinct variables) whose s+1 snake clauses are all in f
    :raises UnsupportedFormulaError: if k != 2 or s is even or larger than 9
    """
    _check_2cnf(f)
    _check_snake_length(s)
    return sum(1 for _ in _snake_sequences(f, s))


def iter_snakes(f: Formula, s: int) -> Iterator[Snake]:
    """yields every snake counted by count_snakes"""
    _check_2cnf(f)
    _check_snake_length(s)
    for path in _snake_sequences(f, s):
        yield Snake(w=[LiteralId.from_label(label) for label in path])

