from fractions import Fraction

import pytest

from elliptic_ring import (
    Argument,
    EPoly,
    EllipticMonomial,
    EllipticPoly,
    HalfPeriod,
    Inhomogeneous,
    NonSymmetricError,
    PoleArgumentError,
    UncoveredArgumentError,
    canonicalize_argument,
    differentiate,
    from_text,
    g2,
    g3,
    normalize,
    poly_add,
    poly_mul,
    reduce_symmetric,
    specialize_half_periods,
    to_text,
    weighted_degree,
    wp,
    wp_prime,
    wp_second,
)
from numeric_eval import eval_elliptic_poly, sample_points, solve_e_roots, threshold_for, wp_pair
from tests.factories import EllipticPolyFactory, RawTermsFactory

U = (1, -1, 0)
V = (0, 1, -1)
W = (1, 0, -1)


class TestArguments:
    def test_canonical_sign(self):
        assert canonicalize_argument((0, -2, 1)) == (Argument((0, 2, -1)), -1)
        assert canonicalize_argument((1, -1, 0)) == (Argument((1, -1, 0)), 1)
        with pytest.raises(PoleArgumentError):
            canonicalize_argument((0, 0))

    def test_add_and_mul_are_the_operators(self):
        a, b = wp(U) + g2(), wp_prime(V)
        assert poly_add(a, b) == a + b
        assert poly_mul(a, b) == a * b
        assert poly_add(a, -a).is_zero()


class TestNormalForm:
    def test_wp_prime_squared(self):
        assert wp_prime(U) * wp_prime(U) == 4 * wp(U) ** 3 - g2() * wp(U) - g3()

    def test_distinct_arguments_unchanged(self):
        product = wp_prime(U) * wp_prime(V)
        assert len(product) == 1
        (mono,) = product.terms
        assert [pp for _, _, pp in mono.factors] == [1, 1]

    def test_cube(self):
        cubic = 4 * wp(U) ** 3 - g2() * wp(U) - g3()
        assert wp_prime(U) ** 3 == wp_prime(U) * cubic

    def test_parity(self):
        assert wp_prime((-1, 1, 0)) == -wp_prime(U)
        assert wp((-1, 1, 0)) == wp(U)

    def test_pole_argument(self):
        with pytest.raises(PoleArgumentError):
            wp((0, 0, 0))

    def test_second_derivative_rewritten(self):
        assert wp_second(U) == 6 * wp(U) ** 2 - g2().scale(Fraction(1, 2))

    @pytest.mark.parametrize('seed', range(4))
    def test_normalize_idempotent(self, seed):
        raw = RawTermsFactory(seed=seed)
        once = normalize(raw)
        again = normalize([
            ({arg: (p, pp) for arg, p, pp in mono.factors}, mono.g2_exp, mono.g3_exp, coeff)
            for mono, coeff in once.terms.items()
        ])
        assert once == again
        assert all(pp <= 1 for mono in once.terms for _, _, pp in mono.factors)

    @pytest.mark.parametrize('seed', range(3))
    def test_normalize_matches_numeric(self, contexts, seed):
        raw = RawTermsFactory(seed=seed)
        normal = normalize(raw)
        ctx = contexts[1]
        mp = ctx.mp
        for point in sample_points(ctx, 2, 5, seed):
            direct = mp.mpc(0)
            for factors, a, b, coeff in raw:
                term = mp.mpf(coeff.numerator) / coeff.denominator * ctx.g2_value ** a * ctx.g3_value ** b
                for arg, (p, pp) in factors.items():
                    z = point.to_mpc(mp, arg.coeffs)
                    value, deriv = wp_pair(ctx, z)
                    term *= value ** p * deriv ** pp
                direct += term
            value, witness = eval_elliptic_poly(ctx, normal, point)
            assert abs(value.value - direct) <= threshold_for(ctx.precision_bits) * max(witness, abs(direct), 1)


class TestDifferentiate:
    def test_chain_rule(self):
        assert differentiate(wp(U), 0) == wp_prime(U)
        assert differentiate(wp(U), 1) == -wp_prime(U)
        assert differentiate(wp(U), 2).is_zero()

    def test_wp_prime(self):
        assert differentiate(wp_prime(U), 0) == 6 * wp(U) ** 2 - g2().scale(Fraction(1, 2))

    @pytest.mark.parametrize('seed', range(4))
    def test_leibniz(self, seed):
        f = EllipticPolyFactory(n=3, seed=seed)
        h = EllipticPolyFactory(n=3, seed=seed + 100)
        for var in range(3):
            assert differentiate(f * h, var) == differentiate(f, var) * h + f * differentiate(h, var)

    @pytest.mark.parametrize('seed', range(3))
    def test_mixed_partials(self, seed):
        f = EllipticPolyFactory(n=3, seed=seed)
        assert differentiate(differentiate(f, 0), 2) == differentiate(differentiate(f, 2), 0)

    def test_weight_raised_by_one(self):
        f = g2() * wp(U) * wp_prime(V)
        assert weighted_degree(f) == 9
        assert weighted_degree(differentiate(f, 1)) == 10


class TestWeightedDegree:
    def test_examples(self):
        assert weighted_degree(g2() * wp(U)) == 6
        assert weighted_degree(wp_prime(U) * wp(V)) == 5
        assert weighted_degree(EllipticPoly()) is None

    def test_inhomogeneous(self):
        report = weighted_degree(wp(U) + g2())
        assert isinstance(report, Inhomogeneous)
        assert report.weights == (2, 4)
        assert len(report.offenders) == 1

    def test_epoly_weights(self):
        e1 = EPoly.root(0)
        assert weighted_degree(e1 * e1) == 4


class TestHalfPeriods:
    ASSIGNMENT = {Argument(U): HalfPeriod.E1, Argument(V): HalfPeriod.E2, Argument(W): HalfPeriod.E3}

    def test_specialize(self):
        e1, e2 = EPoly.root(0), EPoly.root(1)
        assert specialize_half_periods(wp(U) * wp(V), self.ASSIGNMENT) == e1 * e2
        assert not specialize_half_periods(wp_prime(W) * wp(U), self.ASSIGNMENT)

    def test_g_passes_through(self):
        assignment = {Argument((1, 1)): HalfPeriod.E3}
        e3 = EPoly.root(2)
        expected = EPoly({(0, 0, 2, 1, 0): 1})
        assert specialize_half_periods(g2() * wp((1, 1)) ** 2, assignment) == expected
        assert expected == e3 * e3 * EPoly({(0, 0, 0, 1, 0): 1})

    def test_uncovered(self):
        with pytest.raises(UncoveredArgumentError):
            specialize_half_periods(wp((1, 1, 0)), self.ASSIGNMENT)

    def test_vieta(self):
        e1, e2, e3 = (EPoly.root(i) for i in range(3))
        assert not reduce_symmetric(e1 + e2 + e3)
        assert reduce_symmetric(e1 * e1 + e2 * e2 + e3 * e3) == g2().scale(Fraction(1, 2))
        assert reduce_symmetric(e1 * e2 * e3) == g3().scale(Fraction(1, 4))

    def test_non_symmetric(self):
        with pytest.raises(NonSymmetricError) as exc:
            reduce_symmetric(EPoly.root(0))
        assert exc.value.remainder

    def test_matches_numeric_roots(self, contexts):
        e1, e2, e3 = (EPoly.root(i) for i in range(3))
        p = e1 ** 4 + e2 ** 4 + e3 ** 4 + e1 * e2 * e3 * (e1 * e1 + e2 * e2 + e3 * e3)
        reduced = reduce_symmetric(p)
        for ctx in contexts:
            r1, r2, r3 = (r.value for r in solve_e_roots(ctx))
            numeric = r1 ** 4 + r2 ** 4 + r3 ** 4 + r1 * r2 * r3 * (r1 ** 2 + r2 ** 2 + r3 ** 2)
            exact = sum(
                (ctx.mp.mpf(c.numerator) / c.denominator * ctx.g2_value ** m.g2_exp * ctx.g3_value ** m.g3_exp
                 for m, c in reduced.terms.items()),
                ctx.mp.mpf(0),
            )
            assert abs(numeric - exact) <= threshold_for(ctx.precision_bits) * (1 + abs(exact))


class TestSerialization:
    @pytest.mark.parametrize('seed', range(3))
    def test_text_form(self, seed):
        p = EllipticPolyFactory(n=3, seed=seed)
        text = to_text(p)
        assert from_text(text) == p
        assert to_text(from_text(text)) == text

    def test_monomial_order_is_total(self):
        p = wp(U) + wp(V) + g2() + wp_prime(W) * wp(U)
        keys = [mono for mono, _ in p.sorted_terms()]
        assert keys == sorted(keys)
        assert all(isinstance(k, EllipticMonomial) for k in keys)
