"""
Tests for lasso sequences and their k-total values.
"""

from fractions import Fraction

import pytest

from ktotal.errors import LassoError
from ktotal.generators import difference_lasso, random_good_lasso, random_lasso
from ktotal.lasso import (
    MINUS_INFINITY,
    PLUS_INFINITY,
    ExtendedValue,
    Lasso,
    LassoClass,
    classify,
    deltas,
    element_at,
    moment_lasso,
    moment_lasso_pow,
    moment_prefix_sum,
    phi_beta,
    phi_k,
    phi_k_beta,
    phi_k_formula,
    simulate_phi_k,
    split_lasso,
    truncate,
    truncation_error_bound,
    unroll,
)
from ktotal.sequences import as_seq, average_A, moment_pow


class TestExtendedValue:
    """Test exact values with infinities."""

    def test_parse_and_format(self):
        assert str(ExtendedValue.parse("-3/6")) == "-1/2"
        assert ExtendedValue.parse("+inf") == PLUS_INFINITY
        assert ExtendedValue.parse("inf") == PLUS_INFINITY
        assert ExtendedValue.parse("-inf") == MINUS_INFINITY
        assert str(ExtendedValue.of(4)) == "4"

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            ExtendedValue.parse("1/0")
        with pytest.raises(ValueError):
            ExtendedValue.parse("half")

    def test_order(self):
        ordered = [
            MINUS_INFINITY,
            ExtendedValue.of(-5),
            ExtendedValue.of(0),
            ExtendedValue.of(Fraction(1, 2)),
            PLUS_INFINITY,
        ]
        assert sorted(reversed(ordered)) == ordered

    def test_scale(self):
        assert ExtendedValue.of(3).scale(Fraction(1, 2)) == ExtendedValue.of(Fraction(3, 2))
        assert MINUS_INFINITY.scale(4) == MINUS_INFINITY
        with pytest.raises(ValueError):
            ExtendedValue.of(1).scale(0)

    def test_infinities_are_normalized(self):
        assert ExtendedValue(Fraction(3), 1) == PLUS_INFINITY
        assert hash(ExtendedValue(Fraction(-7, 2), -1)) == hash(MINUS_INFINITY)
        assert ExtendedValue(Fraction(3), 1).finite == 0
        assert len({ExtendedValue(Fraction(5), 1), PLUS_INFINITY}) == 1
        assert ExtendedValue(2).finite == Fraction(2)

    @pytest.mark.parametrize("infinity", [2, -3])
    def test_bad_infinity(self, infinity):
        with pytest.raises(ValueError, match="infinity must be"):
            ExtendedValue(Fraction(0), infinity)


class TestLassoBasics:
    """Test construction, indexing and moments."""

    def test_empty_cycle_rejected(self):
        with pytest.raises(LassoError):
            Lasso.of([1], [])

    def test_element_at(self):
        a1 = Lasso.of([1], [0, -1, 0, 1])
        assert element_at(a1, 1) == 1
        assert element_at(Lasso.of([], [1, 0, -1, 0]), 6) == 0
        assert element_at(a1, 9) == 1
        with pytest.raises(LassoError):
            element_at(a1, 0)

    def test_moment_prefix_sum(self):
        assert moment_prefix_sum(Lasso.of([], [1, 0, -1, 0]), 5) == 1
        assert moment_prefix_sum(Lasso.of([Fraction(7, 2)], [0]), 10) == Fraction(7, 2)
        assert moment_prefix_sum(Lasso.of([], [1, 1]), 7) == 7

    def test_moment_prefix_sum_matches_truncation(self, rng):
        for _ in range(100):
            L = random_lasso(rng)
            T = rng.randint(1, 30)
            assert moment_prefix_sum(L, T) == sum(truncate(L, T))

    def test_moment_lasso(self):
        assert moment_lasso(Lasso.of([], [-1, 1, 1, -1])) == Lasso.of([], [-1, 0, 1, 0])
        assert moment_lasso(Lasso.of([], [0])) == Lasso.of([], [0])
        assert moment_lasso(Lasso.of([1], [-1, 1])) == Lasso.of([1], [0, 1])

    def test_moment_lasso_needs_zero_cycle_sum(self):
        with pytest.raises(LassoError):
            moment_lasso(Lasso.of([], [1, 1]))

    def test_moment_lasso_pow_is_a_lasso(self, rng):
        """Test M^k of a lasso good at level k against prefix sums of its truncation."""
        for _ in range(100):
            k = rng.randint(0, 3)
            L = random_good_lasso(rng, k)
            T = L.n * 3
            assert truncate(moment_lasso_pow(L, k), T) == moment_pow(truncate(L, T), k)

    def test_moment_lasso_entry_bound(self, rng):
        """Test that M grows entries by at most a factor of p + q."""
        for _ in range(300):
            L = random_good_lasso(rng, rng.randint(1, 3))
            assert moment_lasso(L).n == L.n
            assert moment_lasso(L).R <= L.n * L.R

    def test_split(self):
        assert split_lasso(Lasso.of([], [1])) == Lasso.of([], [1, -1])
        assert split_lasso(Lasso.of([], [1, 0, -1, 0])) == Lasso.of([], [1, -1, 0, 0, -1, 1, 0, 0])
        assert split_lasso(Lasso.of([2], [3])) == Lasso.of([2, -2], [3, -3])

    def test_truncate(self):
        assert truncate(Lasso.of([], [1, 0, -1, 0]), 6) == as_seq([1, 0, -1, 0, 1, 0])
        assert truncate(Lasso.of([5], [0]), 1) == as_seq([5])
        assert truncate(Lasso.of([], [1]), 3) == as_seq([1, 1, 1])
        with pytest.raises(LassoError):
            truncate(Lasso.of([], [1]), 0)


class TestClassification:
    """Test good/bad classification and phi_k."""

    def test_examples_table(self, example_streams, example_table):
        for k, row in example_table.items():
            assert [str(phi_k(L, k)) for L in example_streams] == row

    def test_classify(self):
        assert classify(Lasso.of([], [1, 0, -1, 0]), 2) == LassoClass.bad(1, 1)
        assert classify(Lasso.of([7], [3]), 0).is_good
        assert classify(Lasso.of([], [1, -1, -1, 1]), 2).is_good
        assert str(LassoClass.bad(1, -1)) == "bad(level=1, sign=-)"

    def test_phi_k(self):
        assert phi_k(Lasso.of([], [1, 0, -1, 0]), 1) == ExtendedValue.of(Fraction(1, 2))
        assert phi_k(Lasso.of([], [1, -1, -1, 1]), 2) == ExtendedValue.of(Fraction(1, 2))
        assert phi_k(Lasso.of([], [-1, 0, 1, 0]), 3) == MINUS_INFINITY

    def test_figure_one_plays(self, example_streams):
        """Test that the plays with a prefix have the values of the streams they equal."""
        a1 = Lasso.of([1], [0, -1, 0, 1])
        a3 = Lasso.of([1], [-1, -1, 1, 1])
        for k in range(5):
            assert phi_k(a1, k) == phi_k(example_streams[1], k)
            assert phi_k(a3, k) == phi_k(example_streams[3], k)

    def test_deltas(self):
        assert deltas(Lasso.of([], [1, 0, -1, 0]), 2) == [0, 2, 7]

    def test_mean_payoff_is_cycle_average(self, rng):
        for _ in range(100):
            L = random_lasso(rng)
            assert phi_k(L, 0) == ExtendedValue.of(average_A(L.cycle))

    def test_unroll_keeps_value(self, rng):
        for _ in range(100):
            L = random_lasso(rng)
            k = rng.randint(0, 3)
            assert phi_k(unroll(L, rng.randint(1, 3)), k) == phi_k(L, k)

    def test_refinement(self, rng):
        """Test that a finite phi^(k+1) forces phi^(k) = 0."""
        for _ in range(300):
            L = random_good_lasso(rng, rng.randint(0, 3))
            for k in range(4):
                if phi_k(L, k + 1).is_finite:
                    assert phi_k(L, k) == ExtendedValue.of(0)


class TestFormula:
    """Test the explicit linear form for good lassos."""

    def test_examples(self):
        assert phi_k_formula(Lasso.of([], [1, 0, -1, 0]), 1) == Fraction(1, 2)
        assert phi_k_formula(Lasso.of([], [0, 0, 0]), 3) == 0
        assert phi_k_formula(Lasso.of([2], [0, 0]), 1) == 2

    def test_bad_lasso_rejected(self):
        with pytest.raises(LassoError):
            phi_k_formula(Lasso.of([], [1, 0, -1, 0]), 2)

    def test_matches_phi_k(self, rng):
        for _ in range(200):
            k = rng.randint(0, 4)
            L = random_good_lasso(rng, k)
            assert ExtendedValue.of(phi_k_formula(L, k)) == phi_k(L, k)


class TestDiscounted:
    """Test discounted values and their distance to phi_k."""

    def test_phi_beta(self):
        assert phi_beta(Lasso.of([], [Fraction(5, 3)]), Fraction(9, 10)) == Fraction(5, 3)
        assert phi_beta(Lasso.of([0], [1]), Fraction(1, 3)) == Fraction(1, 3)
        assert phi_beta(Lasso.of([], [1, 0]), Fraction(1, 2)) == Fraction(2, 3)

    def test_phi_k_beta(self):
        L = Lasso.of([1], [2, -3])
        assert phi_k_beta(L, 0, Fraction(3, 4)) == phi_beta(L, Fraction(3, 4))
        assert phi_k_beta(Lasso.of([], [1]), 1, Fraction(1, 2)) == 2
        # 1 - 2/3 + 4/9 - ... = 3/5
        assert phi_k_beta(Lasso.of([], [1, -1]), 1, Fraction(2, 3)) == Fraction(3, 5)

    def test_beta_range(self):
        for beta in (0, 1, Fraction(3, 2)):
            with pytest.raises(LassoError):
                phi_beta(Lasso.of([], [1]), beta)

    def test_discounted_limit_bound(self, rng):
        betas = [Fraction(9, 10), Fraction(99, 100), Fraction(999, 1000)]
        for _ in range(500):
            k = rng.randint(0, 3)
            L = random_good_lasso(rng, k)
            value = phi_k(L, k).finite
            for beta in betas:
                bound = 2 * (1 - beta) * L.n ** (k + 1) * L.R
                assert abs(value - phi_k_beta(L, k, beta)) <= bound

    def test_discounted_moment(self, rng):
        """Test that discounting M(L) divides the discounted value of L by 1 - beta."""
        betas = [Fraction(1, 2), Fraction(9, 10), Fraction(99, 100)]
        for _ in range(200):
            L = random_good_lasso(rng, rng.randint(1, 3))
            for beta in betas:
                assert phi_beta(moment_lasso(L), beta) == phi_beta(L, beta) / (1 - beta)


class TestSimulation:
    """Test finite-horizon averages against the exact values."""

    def test_examples(self):
        assert simulate_phi_k(Lasso.of([], [1, 0, -1, 0]), 1, 8) == Fraction(1, 2)
        for k in range(4):
            assert simulate_phi_k(Lasso.of([], [0]), k, 17) == 0

    def test_good_lassos_converge(self, rng):
        for _ in range(200):
            k = rng.randint(0, 3)
            L = random_good_lasso(rng, k)
            T = 100 * L.q
            error = abs(simulate_phi_k(L, k, T) - phi_k(L, k).finite)
            assert error <= truncation_error_bound(L, k) / T

    def test_bad_lassos_diverge(self, rng):
        checked = 0
        while checked < 100:
            L = random_lasso(rng, max_p=3, max_q=4, R=3)
            k = rng.randint(1, 3)
            cls = classify(L, k)
            if cls.is_good:
                continue
            checked += 1
            averages = [simulate_phi_k(L, k, j * L.q) for j in (20, 100, 400)]
            steps = [b - a for a, b in zip(averages, averages[1:])]
            assert all(cls.sign * step > 0 for step in steps)

    def test_error_bound_needs_finite_value(self):
        with pytest.raises(LassoError):
            truncation_error_bound(Lasso.of([], [1]), 1)


class TestSplit:
    """Test the value of split lassos one level up."""

    def test_split_theorem(self, rng):
        for _ in range(300):
            L = random_lasso(rng)
            k = rng.randint(0, 3)
            expected = phi_k(L, k).scale(Fraction(2) ** (k - 1))
            assert phi_k(split_lasso(L), k + 1) == expected

    def test_difference_lasso_inverts_moment(self, rng):
        for _ in range(100):
            L = random_lasso(rng)
            assert truncate(moment_lasso(difference_lasso(L)), 20) == truncate(L, 20)
