""" Tests for the discrete grid coupling of F_k(n, mu) """

import math

import numpy as np
import pytest

from geosat.experiments.rng import trial_seed
from geosat.generators import CouplingRangeError
from geosat.generators.coupling import (
    coupling_grid_size,
    coupling_heads_probability,
    expected_extra_heads,
    generate_discrete_coupled,
    slot_probability,
)
from geosat.models.coupling import CollisionReport, CoupledPair
from geosat.models.formula import Formula


class TestCouplingArithmetic:
    """
    Tests for the grid size and the coin probabilities
    """

    @pytest.mark.parametrize(
        "n, d, expected",
        [
            pytest.param(2, 1, 128, id="n=2, d=1"),
            pytest.param(3, 2, 256 * 27, id="n=3, d=2"),
            pytest.param(1000, 1, 16 * 10**9, id="n=1000, d=1"),
        ],
    )
    def test_grid_size(self, n: int, d: int, expected: int):
        assert coupling_grid_size(n, d) == expected

    def test_heads_probability_of_tiny_slots(self):
        q = 1e-12
        assert coupling_heads_probability(q) == pytest.approx(q**2 / 2, rel=1e-6)

    def test_heads_probability_of_large_slots(self):
        q = 0.5
        assert coupling_heads_probability(q) == pytest.approx(math.exp(q) * (q - 1 + math.exp(-q)))

    def test_slot_probability(self):
        assert float(slot_probability(0.5, 128, 2)) == pytest.approx(0.5 / 128**2)

    def test_expected_extra_heads(self):
        q = 50 / 128
        assert expected_extra_heads(2, 1, 50.0) == pytest.approx(4 * 128 * (q - 1 + math.exp(-q)))


class TestDiscreteCoupling:
    """
    Tests for drawing the continuous formula and its grid counterpart
    """

    def test_heads_count_matches_its_mean(self):
        n, d, mu, trials = 2, 1, 50.0, 200
        heads = np.array(
            [generate_discrete_coupled(n, 2, d, mu, rng=trial_seed(6, trial)).heads_count for trial in range(trials)]
        )
        expected = expected_extra_heads(n, d, mu)
        assert expected == pytest.approx(34.4, abs=0.1)
        assert abs(heads.mean() - expected) <= 4 * math.sqrt(expected / trials)

    def test_heads_are_reported(self):
        pair = generate_discrete_coupled(2, 2, 1, 50.0, rng=4)
        assert pair.collision_report.extra_heads == pair.heads_count
        assert pair.discrete.k == pair.continuous.k == 2

    def test_sparse_regime_agrees(self):
        trials = 300
        identical = sum(
            generate_discrete_coupled(50, 2, 1, 0.5, rng=trial_seed(7, trial)).identical for trial in range(trials)
        )
        assert identical / trials >= 0.95

    def test_identical_pairs_have_equal_clauses(self):
        pair = generate_discrete_coupled(50, 2, 1, 0.5, rng=1)
        assert pair.identical == pair.continuous.has_same_clauses(pair.discrete)
        assert pair.continuous.generator_record == pair.discrete.generator_record
        assert pair.continuous.generator_record.seed == 1

    @pytest.mark.parametrize(
        "n, d",
        [
            pytest.param(10, 3, id="too many label slots"),
            pytest.param(10**5, 1, id="grid too fine for doubles"),
        ],
    )
    def test_range_errors(self, n: int, d: int):
        with pytest.raises(CouplingRangeError) as exception_info:
            generate_discrete_coupled(n, 2, d, 1.0, rng=0)
        assert exception_info.value.grid_size == coupling_grid_size(n, d)

    def test_intensity_has_to_be_positive(self):
        with pytest.raises(ValueError):
            generate_discrete_coupled(5, 2, 1, 0.0)


class TestCollisionReport:
    """
    Tests for the result classes of the coupling
    """

    def test_addition(self):
        total = CollisionReport(extra_heads=1) + CollisionReport(same_cell_duplicates=2, boundary_flip_pairs=3)
        assert total == CollisionReport(extra_heads=1, same_cell_duplicates=2, boundary_flip_pairs=3)
        assert not total.is_clean
        assert CollisionReport().is_clean

    def test_identical_flag_is_checked(self):
        formula = Formula.from_clauses(2, 2, [[1, 2]])
        other = Formula.from_clauses(2, 2, [[1, -2]])
        with pytest.raises(ValueError):
            CoupledPair(continuous=formula, discrete=other, identical=True, collision_report=CollisionReport())
