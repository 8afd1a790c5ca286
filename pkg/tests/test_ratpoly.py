"""Unit and property tests for exact polynomial arithmetic and reductions."""

import itertools
import random
from fractions import Fraction as F

import pytest

from casimir_eigen.ratpoly import (
    ClosedForm,
    InterpolationInconsistentError,
    MPoly,
    NotSymmetricError,
    PowerSumPoly,
    alpha,
    eliminate_last_var,
    format_coeff_in_n,
    format_mpoly,
    interpolate_in_n,
    power_sum,
    to_power_sum,
)


def random_mpoly(rng, nvars, max_deg=3, max_terms=5):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        terms[exps] = F(rng.randint(-9, 9), rng.randint(1, 9))
    return MPoly(nvars, terms)


class TestArithmetic:
    def test_difference_of_squares(self):
        a1, a2 = alpha(1, 2), alpha(2, 2)
        assert (a1 + a2) * (a1 - a2) == a1**2 - a2**2

    def test_product_from_cycle_factors(self):
        # (-a1 + a2) * (-a5 + 1) expands to a1*a5 - a2*a5 - a1 + a2
        n = 5
        product = (-alpha(1, n) + alpha(2, n)) * (-alpha(5, n) + 1)
        expected = (
            alpha(1, n) * alpha(5, n)
            - alpha(2, n) * alpha(5, n)
            - alpha(1, n)
            + alpha(2, n)
        )
        assert product == expected
        assert str(product) == "a1*a5 - a2*a5 - a1 + a2"

    def test_mul_by_zero_annihilates(self):
        rng = random.Random(11)
        p = random_mpoly(rng, 3)
        assert p * MPoly.zero(3) == MPoly.zero(3)

    def test_nvars_mismatch_rejected(self):
        with pytest.raises(ValueError):
            alpha(1, 2) + alpha(1, 3)

    def test_ring_laws_on_random_triples(self):
        rng = random.Random(7)
        for _ in range(60):
            a = random_mpoly(rng, 3)
            b = random_mpoly(rng, 3)
            c = random_mpoly(rng, 3)
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_pow_matches_repeated_mul(self):
        rng = random.Random(3)
        p = random_mpoly(rng, 2, max_deg=2, max_terms=3)
        assert p**0 == MPoly.one(2)
        assert p**3 == p * p * p


class TestEval:
    def test_exact_point(self):
        p = alpha(1, 2) ** 2 + alpha(2, 2) ** 2 - F(1, 2)
        assert p.eval_at([F(1, 2), F(-1, 2)]) == 0

    def test_constant(self):
        p = MPoly.const(4, F(7, 3))
        assert p.eval_at([1, 2, 3, 4]) == F(7, 3)

    def test_vanishing_factor(self):
        p = (-alpha(1, 5) + alpha(2, 5)) * (-alpha(5, 5) + 1)
        rng = random.Random(19)
        for _ in range(10):
            x = F(rng.randint(-5, 5), rng.randint(1, 5))
            a5 = F(rng.randint(-5, 5), rng.randint(1, 5))
            assert p.eval_at([x, x, 0, 0, a5]) == 0

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            alpha(1, 3).eval_at([1, 2])


class TestPowerSumReduction:
    def test_pairwise_products(self):
        # sum_{i<j} a_i a_j == -(1/2) p2 once p1 = 0 is imposed
        for n in (3, 4, 5):
            s = MPoly.zero(n)
            for i, j in itertools.combinations(range(1, n + 1), 2):
                s = s + alpha(i, n) * alpha(j, n)
            assert to_power_sum(s, n) == PowerSumPoly({(2,): F(-1, 2)})

    def test_p2_is_p2(self):
        assert to_power_sum(power_sum(2, 4), 4) == PowerSumPoly({(2,): 1})

    def test_p1_reduces_to_zero(self):
        assert to_power_sum(power_sum(1, 5), 5) == PowerSumPoly.zero()

    def test_asymmetric_input_rejected(self):
        with pytest.raises(NotSymmetricError):
            to_power_sum(alpha(1, 3), 3)

    def test_wrong_rank_rejected(self):
        with pytest.raises(ValueError):
            to_power_sum(power_sum(2, 3), 4)

    def test_round_trip_lands_in_p1_ideal(self):
        # expand(to_power_sum(p)) - p must vanish under a_n := -(a1+...+a_{n-1})
        rng = random.Random(23)
        for n in (3, 4):
            for _ in range(10):
                base = random_mpoly(rng, n, max_deg=2, max_terms=3)
                # Symmetrize so a representation exists.
                sym = MPoly.zero(n)
                for perm in itertools.permutations(range(n)):
                    for exps, coeff in base.terms.items():
                        permuted = tuple(exps[perm[i]] for i in range(n))
                        sym = sym + MPoly(n, {permuted: coeff})
                q = to_power_sum(sym, n)
                diff = q.expand(n) - sym
                assert eliminate_last_var(diff) == MPoly.zero(n - 1)


class TestInterpolation:
    def test_cubic_constant_term(self):
        # samples of -(n^3 - n)/12 alongside a constant p2 coefficient
        samples = [
            (2, PowerSumPoly({(2,): 1, (): F(-1, 2)})),
            (3, PowerSumPoly({(2,): 1, (): -2})),
            (4, PowerSumPoly({(2,): 1, (): -5})),
            (5, PowerSumPoly({(2,): 1, (): -10})),
            (6, PowerSumPoly({(2,): 1, (): F(-35, 2)})),
        ]
        cf = interpolate_in_n(samples, 3)
        assert cf == ClosedForm({(2,): (F(1),), (): (0, F(1, 12), 0, F(-1, 12))})
        for n, q in samples:
            assert cf.at(n) == q
        assert str(cf) == "p2 - (n^3 - n)/12"

    def test_constant_samples(self):
        samples = [(n, PowerSumPoly({(): F(5, 7)})) for n in range(2, 7)]
        cf = interpolate_in_n(samples, 3)
        assert cf == ClosedForm({(): (F(5, 7),)})

    def test_underdetermined_rejected(self):
        samples = [(2, PowerSumPoly({(): 1})), (3, PowerSumPoly({(): 2}))]
        with pytest.raises(ValueError):
            interpolate_in_n(samples, 3)

    def test_residual_mismatch_detected(self):
        # n^4 cannot fit a cubic: the 6th sample betrays the first five.
        samples = [(n, PowerSumPoly({(): F(n**4)})) for n in range(1, 7)]
        with pytest.raises(InterpolationInconsistentError):
            interpolate_in_n(samples, 3)

    def test_duplicate_ranks_rejected(self):
        samples = [(2, PowerSumPoly({(): 1}))] * 4
        with pytest.raises(ValueError):
            interpolate_in_n(samples, 3)


class TestFormatting:
    def test_zero(self):
        assert str(MPoly.zero(3)) == "0"
        assert str(PowerSumPoly.zero()) == "0"
        assert str(ClosedForm()) == "0"

    def test_mpoly_canonical_order(self):
        p = alpha(1, 2) ** 2 + alpha(2, 2) ** 2 - F(1, 2)
        assert str(p) == "a1^2 + a2^2 - 1/2"

    def test_custom_names(self):
        p = alpha(1, 2) * alpha(2, 2) * 3
        assert format_mpoly(p, names=["x", "y"]) == "3*x*y"

    def test_coeff_in_n(self):
        assert format_coeff_in_n([F(0), F(1, 2)]) == "n/2"
        assert format_coeff_in_n([F(0), F(-1, 24), 0, 0, F(1, 24)]) == "(n^4 - n)/24"
        assert format_coeff_in_n([F(3, 2)]) == "3/2"

    def test_power_sum_poly_str(self):
        q = PowerSumPoly({(3,): 1, (2,): F(-3, 2), (): 3})
        assert str(q) == "p3 - 3/2*p2 + 3"
