from fractions import Fraction

import pytest

from cm_catalog import (
    A2,
    B2,
    CATALOG,
    TABLES,
    NotationError,
    a2_I,
    a2_L1,
    a2_L2,
    b2_Ix,
    b2_Ix_printed,
    b2_Iy,
    b2_L,
    b2_L1,
    get_system,
    ix_errata,
    render_table,
)
from cm_catalog.systems import A2_NOTATION, B2_NOTATION
from diff_op import (
    SymbolPoly,
    op_add,
    op_commutator,
    op_scale,
    op_weighted_degree,
    permute_operator,
    principal_symbol,
    symbol_is_constant,
)
from elliptic_ring import Inhomogeneous, g2, wp
from numeric_eval import STATUS_FAIL, vanishing_oracle


class TestCatalog:
    @pytest.mark.parametrize('name', sorted(CATALOG))
    def test_weight_and_constant_symbol(self, name):
        builder, _, weight = CATALOG[name]
        op = builder()
        assert op_weighted_degree(op) == weight
        result = symbol_is_constant(principal_symbol(op))
        assert result and result.path == 'structural'

    def test_hamiltonian(self):
        u = wp((1, -1, 0)) + wp((0, 1, -1)) + wp((1, 0, -1))
        assert a2_L1().coefficient((0, 0, 0)) == 4 * u
        assert a2_L1().coefficient((2, 0, 0)) == -1

    def test_momentum(self):
        assert a2_L2().order == 1
        assert set(a2_L2().terms) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}

    def test_b2_half_hamiltonian(self):
        assert b2_L() == op_scale(Fraction(1, 2), b2_L1())

    def test_ix_g2_term(self):
        # −9/2·g2 de la tabla y −15/2·g2 de los tres ℘″ reescritos
        coeff = b2_Ix().coefficient((1, 0))
        assert coeff.terms.get(next(iter(g2().terms))) == -12

    def test_ix_commutes_with_hamiltonian(self, contexts):
        assert vanishing_oracle(contexts, op_commutator(b2_L(), b2_Ix()), 3, 4).passed

    def test_printed_ix_errata(self, contexts):
        assert [row for row, _, _ in ix_errata()] == [6, 7, 8, 11]
        assert isinstance(op_weighted_degree(b2_Ix_printed()), Inhomogeneous)
        residual = op_commutator(b2_L(), b2_Ix_printed())
        assert vanishing_oracle(contexts, residual, 3, 4).status == STATUS_FAIL

    def test_iy_symbol(self):
        expected = SymbolPoly(2, {(0, 5): 1, (2, 3): -5})
        assert principal_symbol(b2_Iy()) == expected

    def test_iy_is_swap(self):
        assert permute_operator(b2_Iy(), (1, 0)) == b2_Ix()

    def test_i12_order(self):
        assert a2_I('12').order == 4
        with pytest.raises(ValueError):
            a2_I('14')


class TestPermutationConsistency:
    def test_i12_transposition(self, contexts):
        """I12 es simétrico en 1↔2, estructuralmente o por el oráculo"""
        swapped = permute_operator(a2_I('12'), (1, 0, 2))
        difference = op_add(swapped, -a2_I('12'))
        if not difference.is_zero():
            assert vanishing_oracle(contexts, difference, 3, 5).passed

    def test_cycle_three_times(self):
        cycle = (1, 2, 0)
        once = permute_operator(a2_I('12'), cycle)
        assert once == a2_I('23')
        assert permute_operator(permute_operator(once, cycle), cycle) == a2_I('12')


class TestSystems:
    def test_half_periods_cover_arguments(self):
        for system in (A2, B2):
            assert len(system.arguments) == len(system.half_periods)
        assert A2.symmetry_group_order == 6
        assert B2.symmetry_group_order == 8

    def test_lookup(self):
        assert get_system('A2') is A2
        with pytest.raises(ValueError):
            get_system('c3')


class TestTables:
    @pytest.mark.parametrize('name', sorted(TABLES))
    def test_render_in_transcription_order(self, name):
        lines = render_table(name).splitlines()
        assert len(lines) == len(TABLES[name])

    def test_render_example(self):
        assert render_table('a2_L2').splitlines() == ['1[d1]', '1[d2]', '1[d3]']

    def test_unknown_table(self):
        with pytest.raises(ValueError):
            render_table('c3_L1')

    def test_notation_errors(self):
        with pytest.raises(NotationError):
            A2_NOTATION.factor('Q12')
        with pytest.raises(NotationError):
            B2_NOTATION.derivative('dz')

    def test_second_derivative_token(self):
        assert B2_NOTATION.factor('Ppp(x)') == 6 * wp((1, 0)) ** 2 - g2().scale(Fraction(1, 2))
