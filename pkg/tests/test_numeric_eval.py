from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from cm_catalog import a2_L1, a2_L3
from diff_op import DiffOp, op_add, op_commutator
from elliptic_ring import Argument, EllipticPoly, g2, g3, wp, wp_prime
from numeric_eval import (
    STATUS_FAIL,
    STATUS_PASS,
    DegenerateCurveError,
    EllipticContext,
    SamplingError,
    SeriesNotConvergedError,
    default_arguments,
    eval_elliptic_poly,
    ode_residual_ratio,
    sample_points,
    solve_e_roots,
    threshold_for,
    vanishing_oracle,
    wp_pair,
)
from numeric_eval import wp as wp_value


@pytest.fixture
def lemniscatic():
    return EllipticContext('4', '0', 128)


class TestWeierstrass:
    def test_laurent_value(self, lemniscatic):
        mp = lemniscatic.mp
        z = mp.mpc(mp.mpf(1) / 10)
        value = wp_value(lemniscatic, z).value
        # z⁻² + z²/5 + z⁶/75
        expected = 100 + mp.mpf(1) / 500 + mp.mpf(1) / (75 * 10 ** 6)
        assert abs(value - expected) < mp.mpf(10) ** -12

    def test_recurrence_start(self, lemniscatic):
        mp = lemniscatic.mp
        assert lemniscatic.laurent_coefficient(2) == mp.mpf(4) / 20
        assert lemniscatic.laurent_coefficient(3) == 0
        assert abs(lemniscatic.laurent_coefficient(4) - (mp.mpf(1) / 5) ** 2 / 3) < mp.mpf(10) ** -30

    def test_ode_and_parity(self, contexts):
        for ctx in contexts:
            bound = threshold_for(ctx.precision_bits)
            for point in sample_points(ctx, 1, 5, 11):
                z = point.to_mpc(ctx.mp, (1,))
                value, deriv = wp_pair(ctx, z)
                assert ode_residual_ratio(ctx, value, deriv) < bound
                minus_value, minus_deriv = wp_pair(ctx, -z)
                assert abs(minus_value - value) <= bound * abs(value)
                assert abs(minus_deriv + deriv) <= bound * abs(deriv)

    def test_finite_difference(self, contexts):
        ctx = contexts[1]
        mp = ctx.mp
        h = mp.mpf(10) ** -12
        for point in sample_points(ctx, 1, 4, 3):
            z = point.to_mpc(mp, (1,))
            forward, _ = wp_pair(ctx, z + h)
            backward, _ = wp_pair(ctx, z - h)
            _, deriv = wp_pair(ctx, z)
            # error O(h²·℘‴)
            assert abs((forward - backward) / (2 * h) - deriv) <= mp.mpf(10) ** -10 * abs(deriv)

    def test_pole_and_radius(self, lemniscatic):
        mp = lemniscatic.mp
        with pytest.raises(SeriesNotConvergedError):
            wp_pair(lemniscatic, mp.mpc(0))
        with pytest.raises(SeriesNotConvergedError):
            wp_pair(lemniscatic, mp.mpc(1))

    def test_degenerate_context(self):
        with pytest.raises(DegenerateCurveError):
            EllipticContext('3', '1', 128)


class TestRoots:
    def test_lemniscatic(self, lemniscatic):
        roots = [r.value for r in solve_e_roots(lemniscatic)]
        assert [float(r.real) for r in roots] == pytest.approx([-1.0, 0.0, 1.0])

    def test_vieta(self, contexts):
        for ctx in contexts:
            e1, e2, e3 = (r.value for r in solve_e_roots(ctx))
            bound = threshold_for(ctx.precision_bits)
            assert abs(e1 + e2 + e3) <= bound
            assert abs(e1 * e2 * e3 - ctx.g3_value / 4) <= bound


class TestSampling:
    def test_reproducible(self, lemniscatic):
        first = sample_points(lemniscatic, 3, 8, 42)
        assert len(first) == 8
        assert first == sample_points(lemniscatic, 3, 8, 42)
        assert first != sample_points(lemniscatic, 3, 8, 43)

    def test_constraints(self, lemniscatic):
        for point in sample_points(lemniscatic, 3, 8, 42):
            for x, y in point.assignment:
                assert Fraction(1, 50) ** 2 <= x * x + y * y <= Fraction(3, 50) ** 2
            for arg in default_arguments(3):
                re, im = point.argument_value(arg.coeffs)
                assert Fraction(1, 100) ** 2 <= re * re + im * im <= lemniscatic.sample_scale ** 2

    def test_impossible_argument(self, lemniscatic):
        # |20·x1| ≥ 0.4 nunca cabe en la escala 0.15
        with pytest.raises(SamplingError):
            sample_points(lemniscatic, 3, 1, 1, arguments=[Argument((20, 0, 0))])

    def test_reduced_scale_shrinks_radii(self, lemniscatic):
        scale = lemniscatic.sample_scale / 8
        for point in sample_points(lemniscatic, 3, 4, 42, scale=scale):
            for x, y in point.assignment:
                assert (Fraction(1, 50) / 8) ** 2 <= x * x + y * y <= (Fraction(3, 50) / 8) ** 2
            for arg in default_arguments(3):
                re, im = point.argument_value(arg.coeffs)
                assert (Fraction(1, 100) / 8) ** 2 <= re * re + im * im <= scale ** 2


class TestEvaluate:
    def test_ode_polynomial(self, lemniscatic):
        u = (1, -1)
        p = wp_prime(u) ** 2 - 4 * wp(u) ** 3 + g2() * wp(u) + g3()
        # ℘′² se reduce en la construcción: el polinomio es idénticamente nulo
        assert p.is_zero()
        value, witness = eval_elliptic_poly(lemniscatic, p, sample_points(lemniscatic, 2, 1, 0)[0])
        assert not value.value and witness == 0.0

    def test_single_factor(self, lemniscatic):
        point = sample_points(lemniscatic, 3, 1, 5)[0]
        value, witness = eval_elliptic_poly(lemniscatic, wp((1, -1, 0)), point)
        direct, _ = wp_pair(lemniscatic, point.to_mpc(lemniscatic.mp, (1, -1, 0)))
        assert value.value == direct
        assert witness == pytest.approx(float(abs(direct)))


class TestVanishingOracle:
    def test_structural_zero(self, contexts):
        result = vanishing_oracle(contexts, DiffOp.zero(3), 3, 1)
        assert result.status == STATUS_PASS
        assert result.structural_zero and result.max_ratio == 0.0

    def test_l1_l3_commute(self, contexts):
        residual = op_commutator(a2_L1(), a2_L3())
        result = vanishing_oracle(contexts, residual, 3, 1)
        assert result.status == STATUS_PASS
        assert result.max_ratio < threshold_for(128)

    def test_mutation_fails(self, contexts):
        # el orden 4 del conmutador se cancela exactamente: ahí ℘12 queda solo
        residual = op_add(
            op_commutator(a2_L1(), a2_L3()), DiffOp(3, {(4, 0, 0): wp((1, -1, 0))}),
        )
        result = vanishing_oracle(contexts, residual, 3, 1)
        assert result.status == STATUS_FAIL
        assert result.max_ratio == pytest.approx(1.0)

    def test_preconditions(self, contexts):
        with pytest.raises(ValueError):
            vanishing_oracle(contexts, DiffOp.zero(3), 2, 1)
        with pytest.raises(ValueError):
            vanishing_oracle([contexts[0], contexts[0]], DiffOp.zero(3), 3, 1)

    def test_threads_do_not_change_result(self, contexts):
        residual = op_commutator(a2_L1(), a2_L3())
        serial = vanishing_oracle(contexts, residual, 3, 9)
        with ThreadPoolExecutor(max_workers=3) as pool:
            threaded = vanishing_oracle(contexts, residual, 3, 9, executor=pool)
        assert serial == threaded

    def test_dict_residual(self, contexts):
        result = vanishing_oracle(contexts, {'cero': EllipticPoly(), 'g2': g2() - g2()}, 3, 2, n_vars=2)
        assert result.passed
