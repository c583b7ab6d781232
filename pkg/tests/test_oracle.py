import math
from fractions import Fraction

import pytest

from cedigits import (
    Explicit,
    Naturals,
    OracleParams,
    Polynomial,
    Primes,
    alpha_threshold,
    comparison_deficit,
    d_exact,
    d_leading,
    excess_lower_bound,
    hypothesis_report,
    is_integral_multiplier,
    ones_exact_champernowne,
    ones_excess_exact,
    ones_excess_leading,
)
from cedigits.oracle import FINITE_SAMPLE_DISCLAIMER

from conftest import concat_stream_full, simple_prime_count

ONE = Fraction(1)
HALF3 = Fraction(3, 2)
TWO = Fraction(2)

# small enough for literal enumeration, varied enough to exercise the floors
ENUM_GRID = [
    (b, c, k)
    for b in (2, 3, 10)
    for c in (ONE, HALF3, TWO)
    for k in (1, 2, 3, 4)
]


def enumerated_boundary(b: int, c: Fraction, k: int) -> list[int]:
    """All digits through the final copy of 2*b**(k-1) - 1, literally."""
    top = 2 * b ** (k - 1) - 1
    return concat_stream_full(range(1, top + 1), b, c.numerator, c.denominator)


class TestDExact:
    def test_binary_k3(self):
        assert d_exact(OracleParams(2, ONE, 3)) == 17

    def test_k1_is_floor_c(self):
        for b in (2, 7, 10):
            assert d_exact(OracleParams(b, ONE, 1)) == 1
        assert d_exact(OracleParams(10, HALF3, 1)) == 1
        assert d_exact(OracleParams(10, Fraction(7, 2), 1)) == 3

    def test_decimal_k2(self):
        assert d_exact(OracleParams(10, ONE, 2)) == 29

    @pytest.mark.parametrize("b,c,k", ENUM_GRID)
    def test_matches_enumeration(self, b, c, k):
        assert d_exact(OracleParams(b, c, k)) == len(enumerated_boundary(b, c, k))


class TestOnesExact:
    def test_binary_k3(self):
        assert ones_exact_champernowne(OracleParams(2, ONE, 3)) == 12

    def test_decimal_k1(self):
        assert ones_exact_champernowne(OracleParams(10, ONE, 1)) == 1

    def test_binary_k1(self):
        assert ones_exact_champernowne(OracleParams(2, ONE, 1)) == 1

    @pytest.mark.parametrize("b,c,k", ENUM_GRID)
    def test_matches_enumeration(self, b, c, k):
        digits = enumerated_boundary(b, c, k)
        assert ones_exact_champernowne(OracleParams(b, c, k)) == digits.count(1)


class TestLeadingForms:
    def test_d_leading_binary(self):
        assert d_leading(OracleParams(2, ONE, 10)) == pytest.approx(10240.0)

    def test_d_leading_decimal(self):
        assert d_leading(OracleParams(10, ONE, 2)) == pytest.approx(40.0)

    def test_relative_error_shrinks(self):
        def rel(k):
            p = OracleParams(2, ONE, k)
            return abs(d_exact(p) / d_leading(p) - 1)

        assert rel(25) < rel(10) < rel(5)

    def test_ones_excess_leading_binary(self):
        assert ones_excess_leading(OracleParams(2, ONE, 3)) == pytest.approx(4.0)

    def test_ones_excess_leading_decimal(self):
        assert ones_excess_leading(OracleParams(10, ONE, 2)) == pytest.approx(9 + 1 / 9)

    def test_exact_excess_example(self):
        assert ones_excess_exact(OracleParams(2, ONE, 3)) == Fraction(7, 2)

    @pytest.mark.parametrize("c", [ONE, TWO, Fraction(3)])
    @pytest.mark.parametrize("b", [2, 3, 10])
    def test_integral_c_excess_identity(self, b, c):
        # with integral c the repetition floors are exact powers and the
        # exact excess equals the leading form minus cb/(b**2 (cb-1))
        cb = c * b
        shift = cb / (b * b * (cb - 1))
        for k in range(1, 12):
            p = OracleParams(b, c, k)
            expected = Fraction(cb) ** k * (
                Fraction(b - 1, b * b) + Fraction(1, b * b) / (cb - 1)
            ) - shift
            assert ones_excess_exact(p) == expected

    def test_excess_ratio_to_scale_stays_positive(self):
        # measured excess divided by (cb)**k settles near a positive level
        for b, c in ((2, ONE), (10, ONE), (2, HALF3)):
            ratios = [
                ones_excess_exact(OracleParams(b, c, k)) / (c * b) ** k
                for k in range(6, 16)
            ]
            assert all(r > 0 for r in ratios)
            assert ratios[-1] > Fraction(1, 4 * b)


class TestComparisonDeficit:
    def test_empty_sequence_removes_nothing(self):
        assert comparison_deficit(Explicit(()), OracleParams(10, ONE, 3)) == 0

    def test_singleton_one(self):
        assert comparison_deficit(Explicit((1,)), OracleParams(2, ONE, 3)) == 1

    def test_primes_decimal_k2(self, pi_oracle):
        assert pi_oracle(9) == 4
        assert pi_oracle(19) == 8
        assert comparison_deficit(Primes(), OracleParams(10, ONE, 2)) == 2 * 4 + 1 * 4

    @pytest.mark.parametrize("b,c,k", [(10, ONE, 3), (2, HALF3, 5), (3, TWO, 3)])
    def test_matches_enumeration(self, b, c, k):
        """The deficit is exactly the count of digit slots occupied by
        members of the deleted sequence, computed here by enumeration."""
        seq = Polynomial((0, 0, 1))  # squares
        top = 2 * b ** (k - 1) - 1
        slots = 0
        for m in range(1, top + 1):
            digits = len(concat_stream_full([m], b, 1, 1))
            reps = c.numerator**digits // c.denominator**digits
            if seq.is_member(m):
                slots += digits * reps
        assert comparison_deficit(seq, OracleParams(b, c, k)) == slots


class TestAlphaThreshold:
    def test_decimal_value(self):
        assert alpha_threshold(10, 1) == pytest.approx(1.0490, abs=1e-4)

    def test_binary_value(self):
        assert alpha_threshold(2, 1) == pytest.approx(math.log(2) / 2, abs=1e-12)

    def test_decreases_in_c(self):
        assert alpha_threshold(10, 2) < alpha_threshold(10, HALF3) < alpha_threshold(10, 1)

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            alpha_threshold(1, 1)
        with pytest.raises(ValueError):
            alpha_threshold(10, Fraction(1, 2))


class TestExcessLowerBound:
    def test_alpha_zero_degenerates_to_leading_excess(self):
        for b, c, k in ((2, ONE, 5), (10, ONE, 3), (3, HALF3, 7), (10, TWO, 4)):
            p = OracleParams(b, c, k)
            lead = ones_excess_leading(p)
            assert excess_lower_bound(p, 0.0) == pytest.approx(lead, rel=1e-12)

    def test_decimal_example(self):
        got = excess_lower_bound(OracleParams(10, ONE, 2), 1.0)
        assert got == pytest.approx(9 + 1 / 9 - 20 / math.log(10), rel=1e-12)
        assert got == pytest.approx(0.4252, abs=1e-3)

    def test_sign_flips_at_threshold(self):
        for b, c in ((2, ONE), (10, ONE), (3, TWO)):
            thr = alpha_threshold(b, c)
            p = OracleParams(b, c, 6)
            assert excess_lower_bound(p, thr * 0.999) > 0
            assert excess_lower_bound(p, thr * 1.001) < 0


class TestHypothesisReport:
    def test_empty_sequence_holds_everywhere(self):
        report = hypothesis_report(Explicit(()), 10, 1, [10, 1000, 10**6])
        assert all(s.ratio == 0.0 for s in report.samples)
        assert all(s.holds_at_x for s in report.samples)

    def test_prime_ratios_small(self):
        report = hypothesis_report(Primes(), 10, 1, [100, 10**4])
        assert report.samples[0].count == simple_prime_count(100) == 25
        assert report.samples[0].ratio == pytest.approx(25 * math.log(100) / 100)
        assert report.samples[1].count == simple_prime_count(10**4)

    def test_prime_ratio_exceeds_decimal_threshold_at_desk_scale(self):
        report = hypothesis_report(Primes(), 10, 1, [10**6])
        assert not report.samples[0].holds_at_x

    def test_small_x_rejected(self):
        with pytest.raises(ValueError):
            hypothesis_report(Primes(), 10, 1, [1])

    def test_disclaimer_states_undecidability(self):
        report = hypothesis_report(Explicit(()), 10, 1, [100])
        assert report.disclaimer == FINITE_SAMPLE_DISCLAIMER
        assert "cannot decide" in report.disclaimer


class TestParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            OracleParams(1, ONE, 3)
        with pytest.raises(ValueError):
            OracleParams(10, Fraction(1, 2), 3)
        with pytest.raises(ValueError):
            OracleParams(10, ONE, 0)

    def test_integral_multiplier_predicate(self):
        assert is_integral_multiplier(1)
        assert is_integral_multiplier(Fraction(4, 2))
        assert not is_integral_multiplier(HALF3)
