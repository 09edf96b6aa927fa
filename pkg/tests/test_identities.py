"""
Identidades completas entre integrales. Tardan minutos: pytest -m slow
"""

import json

import pytest

from cli.main import main
from cli.services import (
    EXIT_FAIL,
    EXIT_MISMATCH,
    EXIT_PASS,
    Runtime,
    check_cubic,
    check_pair,
    check_quartic,
    check_sum,
    run_derive,
    run_verify,
)
from cm_catalog import TABLES, a2_I, a2_L1, a2_L2, a2_L3, b2_Ix, b2_L, b2_M, clear_caches
from numeric_eval import STATUS_FAIL
from relations import (
    A2_WEIGHTS,
    B2_WEIGHTS,
    AbstractIntegralPoly,
    BCoefficients,
    build_B_coefficients,
    build_a2_relations,
    build_b2_relations,
    diff_against_printed,
    verify_relation,
)
from tests.factories import RunConfigFactory
from tests.test_cli import FAST, TWO_CONTEXTS

pytestmark = pytest.mark.slow


@pytest.fixture
def runtime():
    with Runtime(RunConfigFactory()) as rt:
        yield rt


class TestCommutators:
    @pytest.mark.parametrize('system', ['a2', 'b2'])
    def test_all_pairs(self, system):
        code, (report,) = run_verify(RunConfigFactory(system=system, checks=['commutators']))
        assert code == EXIT_PASS
        labels = {d['label'] for d in report['details']}
        assert ('[L1,L2]' in labels) if system == 'a2' else ('[L,M]' in labels)


class TestA2Relations:
    def test_cubic_for_each_integral(self, runtime):
        reports = check_cubic(runtime, 'a2')
        assert [r.check for r in reports] == ['cubic[I12]', 'cubic[I23]', 'cubic[I31]']
        assert all(r.passed for r in reports)

    def test_pair_relation(self, runtime):
        assert all(r.passed for r in check_pair(runtime, 'a2'))

    def test_perturbed_a1_fails(self, runtime):
        # A1 + 1 suma exactamente I² a la cúbica
        cubic, _ = build_a2_relations()
        I = AbstractIntegralPoly.generator('I', cubic.generators)
        binding = {'L1': a2_L1(), 'L2': a2_L2(), 'L3': a2_L3(), 'I': a2_I('12')}
        report = verify_relation(cubic + I ** 2, binding, **runtime.oracle_kwargs())
        assert report.status == STATUS_FAIL
        assert report.max_residual_ratio > 1e-6


class TestB2Relations:
    def test_quartic_with_derived_coefficients(self, runtime):
        reports = check_quartic(runtime, 'b2')
        assert [r.check for r in reports] == ['quartic[Ix]', 'quartic[Iy]']
        assert all(r.passed for r in reports)

    def test_sum_relation(self, runtime):
        assert all(r.passed for r in check_sum(runtime, 'b2'))

    def test_derived_b2_is_homogeneous(self, runtime):
        derived = runtime.derived_b2_coefficients()
        printed = build_B_coefficients()
        assert derived.B1.weighted_degree(B2_WEIGHTS) == 10
        assert derived.B2.weighted_degree(B2_WEIGHTS) == 20
        # sólo la parte sin g2, g3 de B1 está comprobada a mano contra el símbolo
        g_free = {exps: c for exps, c in derived.B1.terms.items() if exps[2:] == (0, 0)}
        assert g_free == {exps: c for exps, c in printed.B1.terms.items() if exps[2:] == (0, 0)}
        assert g_free == {(5, 0, 0, 0): 32, (3, 1, 0, 0): -120, (1, 2, 0, 0): 120}
        weights = {d.weight for d in diff_against_printed(derived.B2, printed.B2, B2_WEIGHTS)}
        assert 26 in weights

    def test_perturbed_b1_fails(self, runtime):
        # 33 en lugar de 32 delante de L⁵ suma L⁵I² a la cuártica
        derived = runtime.derived_b2_coefficients()
        L = AbstractIntegralPoly.generator('L', derived.B1.generators)
        quartic, _ = build_b2_relations(BCoefficients(derived.B1 + L ** 5, derived.B2, ()))
        binding = {'L': b2_L(), 'M': b2_M(), 'I': b2_Ix()}
        report = verify_relation(quartic, binding, **runtime.oracle_kwargs())
        assert report.status == STATUS_FAIL
        assert report.max_residual_ratio > 1e-6


class TestCorruptedTable:
    @pytest.fixture
    def corrupted_ix(self, monkeypatch):
        """I_x con −11 en lugar de −10 en la fila de ∂x³, construido por la notación"""
        rows = list(TABLES['b2_Ix'])
        assert rows[2][0] == '-10'
        rows[2] = ('-11',) + rows[2][1:]
        clear_caches()
        monkeypatch.setitem(TABLES, 'b2_Ix', tuple(rows))
        yield
        monkeypatch.undo()
        clear_caches()

    def test_verify_all_exits_fail(self, tmp_path, corrupted_ix):
        path = tmp_path / 'b2.json'
        argv = ['verify', *FAST, *TWO_CONTEXTS, '--system', 'b2', '--check', 'all', '--report', str(path)]
        assert main(argv) == EXIT_FAIL
        reports = {r['check']: r for r in json.loads(path.read_text(encoding='utf-8'))['reports']}
        commutator = {d['label']: d for d in reports['commutators']['details']}['[L,Ix]']
        assert commutator['status'] == STATUS_FAIL
        assert commutator['worst']['coefficient_multiindex']
        assert reports['quartic[Ix]']['status'] == STATUS_FAIL


class TestDerive:
    @pytest.mark.parametrize('target', ['A1', 'A2', 'A3'])
    def test_a2_coefficients_match(self, target):
        code, report = run_derive(RunConfigFactory(system='a2', target=target))
        assert code == EXIT_PASS
        assert report['status'] == 'match' and report['round_trip'] == 'pass'
        assert report['weight'] == str(4 * int(target[1]))

    def test_b2_flags_printed_term(self):
        code, report = run_derive(RunConfigFactory(system='b2', target='B2'))
        assert code == EXIT_MISMATCH
        assert report['weight'] == '20'
        assert any(d['weight'] == 26 for d in report['diff'])
        assert len(report['flagged']) == 2

    def test_a1_weights_agree(self):
        code, report = run_derive(RunConfigFactory(system='a2', target='A1'))
        derived = AbstractIntegralPoly.from_text(report['derived_text'])
        assert code == EXIT_PASS
        assert derived.weighted_degree(A2_WEIGHTS) == 4
