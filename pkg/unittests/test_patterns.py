""" Tests for counting bicycles and snakes in 2-CNFs """

import itertools
from typing import Iterator, Set, Tuple

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geosat.models.enums import Sign
from geosat.models.formula import Formula, LiteralId
from geosat.models.sat_results import Bicycle, Snake
from geosat.solvers import UnsupportedFormulaError
from geosat.solvers.patterns import count_bicycles, count_snakes, has_bicycle, iter_snakes
from geosat.solvers.two_sat import solve_2sat


@st.composite
def two_cnfs(draw, max_vars: int = 3, max_clauses: int = 10) -> Formula:
    """small random 2-CNFs"""
    n_vars = draw(st.integers(min_value=1, max_value=max_vars))
    literal = st.integers(min_value=1, max_value=n_vars).flatmap(
        lambda variable: st.sampled_from([variable, -variable])
    )
    clauses = draw(st.lists(st.lists(literal, min_size=2, max_size=2), max_size=max_clauses))
    return Formula.from_clauses(n_vars, 2, clauses)


def _clause_set(formula: Formula) -> Set[Tuple[int, ...]]:
    return {tuple(row) for row in formula.unique_label_rows().tolist()}


def _literal_sequences(n_vars: int, length: int) -> Iterator[Tuple[LiteralId, ...]]:
    for variables in itertools.permutations(range(1, n_vars + 1), length):
        for signs in itertools.product([Sign.POSITIVE, Sign.NEGATIVE], repeat=length):
            yield tuple(LiteralId(variable=variable, sign=sign) for variable, sign in zip(variables, signs))


def _brute_force_bicycles(formula: Formula, length: int) -> int:
    clauses = _clause_set(formula)
    count = 0
    for w in _literal_sequences(formula.n_vars, length):
        candidates = set(w) | {literal.negation() for literal in w}
        for u, v in itertools.product(candidates, repeat=2):
            if all(clause.labels in clauses for clause in Bicycle(w=w, u=u, v=v).clauses):
                count += 1
    return count


def _brute_force_snakes(formula: Formula, s: int) -> int:
    clauses = _clause_set(formula)
    return sum(
        1
        for w in _literal_sequences(formula.n_vars, s)
        if all(clause.labels in clauses for clause in Snake(w=w).clauses)
    )


def _formula_of(clauses) -> Formula:
    rows = [clause.labels for clause in clauses]
    return Formula.from_label_rows((max(max(row) for row in rows) + 1) // 2, 2, rows)


class TestBicycles:
    """
    Tests for the bicycle counter
    """

    def test_shortest_bicycle(self):
        # (x1 or x1), (-x1 or -x1): w = x1, u = x1, v = -x1
        formula = Formula.from_clauses(1, 2, [[1, 1], [-1, -1]])
        assert count_bicycles(formula, 1) == {1: 2}
        assert has_bicycle(formula, 1)

    def test_no_clauses_no_bicycles(self):
        formula = Formula.from_clauses(3, 2, [])
        assert count_bicycles(formula, 3) == {1: 0, 2: 0, 3: 0}
        assert not has_bicycle(formula, 3)

    def test_bicycle_clauses(self):
        x1, x2 = LiteralId(variable=1), LiteralId(variable=2)
        bicycle = Bicycle(w=[x1, x2], u=x2.negation(), v=x1)
        assert bicycle.length == 2
        assert [clause.labels for clause in bicycle.clauses] == [(1, 4), (2, 3), (1, 4)]

    def test_endpoints_have_to_belong_to_the_path(self):
        with pytest.raises(ValueError):
            Bicycle(w=[LiteralId(variable=1)], u=LiteralId(variable=2), v=LiteralId(variable=1))

    @settings(max_examples=60, deadline=None)
    @given(formula=two_cnfs())
    def test_equals_brute_force(self, formula: Formula):
        counts = count_bicycles(formula, 3)
        for length in range(1, 4):
            assert counts[length] == _brute_force_bicycles(formula, length)

    @settings(max_examples=150, deadline=None)
    @given(formula=two_cnfs(max_vars=5, max_clauses=14))
    def test_unsatisfiable_formulas_contain_a_bicycle(self, formula: Formula):
        if not solve_2sat(formula).is_satisfiable:
            assert has_bicycle(formula, formula.n_vars)

    @pytest.mark.parametrize(
        "formula, l_max",
        [
            pytest.param(Formula.from_clauses(3, 3, [[1, 2, 3]]), 2, id="3-CNF"),
            pytest.param(Formula.from_clauses(2, 2, [[1, 2]]), 0, id="zero length"),
            pytest.param(Formula.from_clauses(2, 2, [[1, 2]]), 13, id="too long"),
        ],
    )
    def test_unsupported_arguments(self, formula: Formula, l_max: int):
        with pytest.raises(UnsupportedFormulaError):
            count_bicycles(formula, l_max)
        with pytest.raises(UnsupportedFormulaError):
            has_bicycle(formula, l_max)


class TestSnakes:
    """
    Tests for the snake counter
    """

    def test_snake_of_length_three(self):
        x1, x2, x3 = (LiteralId(variable=variable) for variable in (1, 2, 3))
        snake = Snake(w=[x1, x2, x3])
        assert snake.middle == x2
        formula = _formula_of(snake.clauses)
        assert formula.n_vars == 3
        assert count_snakes(formula, 3) >= 1
        assert snake in set(iter_snakes(formula, 3))
        assert not solve_2sat(formula).is_satisfiable

    def test_snake_of_length_one(self):
        formula = Formula.from_clauses(1, 2, [[1, 1], [-1, -1]])
        assert count_snakes(formula, 1) == 2

    def test_even_snakes_do_not_exist(self):
        with pytest.raises(ValueError):
            Snake(w=[LiteralId(variable=1), LiteralId(variable=2)])

    @settings(max_examples=60, deadline=None)
    @given(formula=two_cnfs())
    def test_equals_brute_force(self, formula: Formula):
        for s in (1, 3):
            assert count_snakes(formula, s) == _brute_force_snakes(formula, s)

    @settings(max_examples=60, deadline=None)
    @given(formula=two_cnfs(max_vars=4, max_clauses=12))
    def test_repeated_clauses_do_not_change_the_count(self, formula: Formula):
        doubled = Formula.from_label_rows(
            formula.n_vars, 2, np.concatenate([formula.literal_labels, formula.literal_labels[::-1]])
        )
        assert doubled.clause_count == 2 * formula.clause_count
        for s in (1, 3):
            assert count_snakes(doubled, s) == count_snakes(formula, s)

    @settings(max_examples=60, deadline=None)
    @given(formula=two_cnfs(max_vars=5, max_clauses=16))
    def test_every_snake_is_unsatisfiable(self, formula: Formula):
        for snake in iter_snakes(formula, 3):
            assert not solve_2sat(_formula_of(snake.clauses)).is_satisfiable

    @pytest.mark.parametrize(
        "formula, s",
        [
            pytest.param(Formula.from_clauses(3, 3, [[1, 2, 3]]), 3, id="3-CNF"),
            pytest.param(Formula.from_clauses(2, 2, [[1, 2]]), 2, id="even length"),
            pytest.param(Formula.from_clauses(2, 2, [[1, 2]]), 11, id="too long"),
        ],
    )
    def test_unsupported_arguments(self, formula: Formula, s: int):
        with pytest.raises(UnsupportedFormulaError):
            count_snakes(formula, s)
