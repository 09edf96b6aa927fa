import json
from fractions import Fraction

import pytest

from cli.main import main
from cli.serializers import RunConfigSerializer, parse_context
from cli.services import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, Runtime, run_selftest, run_verify
from relations import NotExpressibleError
from tests.factories import RunConfigFactory

FAST = ['--precision-bits', '128', '--trials', '3', '--seed', '7', '--no-cache']
TWO_CONTEXTS = ['--context', '4/1,0/1', '--context', '7/3,5/7']

VERIFICATION_FIELDS = [
    'check', 'system', 'status', 'max_residual_ratio', 'witness_scale', 'trials', 'seed',
    'precision_bits', 'contexts', 'elapsed_ms', 'structural_zero', 'details', 'notes',
]


def verify(*extra):
    return main(['verify', *FAST, *TWO_CONTEXTS, *extra])


class TestUsage:
    @pytest.mark.parametrize('argv', [
        ['verify', '--precision-bits', '32', *TWO_CONTEXTS],
        ['verify', '--trials', '2', *TWO_CONTEXTS],
        ['verify', '--context', '3/1,1/1', '--context', '4/1,0/1'],
        ['verify', '--context', '4.0,0', '--context', '7/3,5/7'],
        ['verify', '--context', '4/1,0/1'],
        ['verify', '--context', '4/1,0/1', '--context', '4,0'],
        ['verify', '--check', 'quintic', *TWO_CONTEXTS],
        ['derive', *TWO_CONTEXTS],
        ['derive', '--target', 'B1', '--system', 'a2', *TWO_CONTEXTS],
        ['transmogrify'],
        [],
    ])
    def test_exit_64(self, argv):
        assert main(argv) == EXIT_USAGE

    def test_selftest_accepts_one_context(self):
        assert main(['selftest', *FAST, '--context', '4/1,0/1']) == EXIT_PASS


class TestVerify:
    @pytest.mark.parametrize('check', ['catalog', 'sv-remark', 'separation', 'independence'])
    def test_structural_checks_pass(self, check):
        assert verify('--check', check) == EXIT_PASS

    def test_report_schema(self, tmp_path):
        path = tmp_path / 'run.json'
        assert verify('--system', 'a2', '--check', 'catalog', '--check', 'sv-remark',
                      '--report', str(path)) == EXIT_PASS
        data = json.loads(path.read_text(encoding='utf-8'))
        assert list(data) == ['command', 'exit_code', 'config', 'reports']
        assert data['command'] == 'verify' and data['exit_code'] == 0
        assert data['config']['contexts'] == ['4/1,0/1', '7/3,5/7']
        assert [r['check'] for r in data['reports']] == ['sv-remark', 'catalog']
        for report in data['reports']:
            assert list(report) == VERIFICATION_FIELDS
            assert report['elapsed_ms'] == 0

    def test_report_is_byte_identical(self, tmp_path):
        path = tmp_path / 'run.json'
        args = ('--check', 'catalog', '--check', 'separation', '--report', str(path))
        assert verify(*args) == EXIT_PASS
        first = path.read_bytes()
        assert verify(*args) == EXIT_PASS
        assert path.read_bytes() == first

    def test_threads_do_not_change_reports(self, tmp_path):
        serial, threaded = tmp_path / 'serial.json', tmp_path / 'threaded.json'
        assert verify('--check', 'independence', '--report', str(serial)) == EXIT_PASS
        assert verify('--check', 'independence', '--threads', '2', '--report', str(threaded)) == EXIT_PASS
        reports = [json.loads(p.read_text(encoding='utf-8'))['reports'] for p in (serial, threaded)]
        assert reports[0] == reports[1]


class TestServices:
    def test_run_verify(self):
        code, reports = run_verify(RunConfigFactory(system='b2', checks=['catalog']))
        assert code == EXIT_PASS
        assert [(r['system'], r['check']) for r in reports] == [('b2', 'catalog')]
        assert {d['label'] for d in reports[0]['details']} >= {'b2_L', 'b2_M', 'b2_Ix', 'b2_Iy'}
        assert 'fila 6: ' in reports[0]['notes'][1]
        assert len(reports[0]['notes']) == 5

    def test_underivable_b2_coefficients_fail(self, monkeypatch):
        def stalled(self):
            raise NotExpressibleError("resto de orden 6", order=6)

        monkeypatch.setattr(Runtime, 'derived_b2_coefficients', stalled)
        code, reports = run_verify(RunConfigFactory(system='b2', checks=['quartic', 'sum']))
        assert code == EXIT_FAIL
        assert [r['check'] for r in reports] == ['quartic[Ix]', 'quartic[Iy]', 'sum[Ix,Iy]']
        assert all('resto de orden 6' in r['notes'][0] for r in reports)

    def test_checks_skip_other_system(self):
        code, reports = run_verify(RunConfigFactory(system='b2', checks=['sv-remark']))
        assert code == EXIT_PASS and reports == []

    def test_run_selftest(self):
        code, suites = run_selftest(RunConfigFactory())
        assert code == EXIT_PASS
        assert [s['suite'] for s in suites] == [
            'scalars', 'elliptic_ring', 'normal_form', 'diff_op', 'threading', 'numeric_eval',
        ]


class TestRunConfigSerializer:
    def test_valid(self):
        serializer = RunConfigSerializer(data=RunConfigFactory(contexts=['4,0', '-1/2,3']))
        assert serializer.is_valid(), serializer.errors
        assert serializer.validated_data['contexts'] == ['4/1,0/1', '-1/2,3/1']

    def test_all_expands(self):
        serializer = RunConfigSerializer(data=RunConfigFactory(checks=['all']))
        assert serializer.is_valid()
        assert 'all' not in serializer.validated_data['checks']
        assert 'commutators' in serializer.validated_data['checks']

    @pytest.mark.parametrize('field, value', [
        ('precision_bits', 63),
        ('trials', 2),
        ('contexts', []),
        ('contexts', ['1.5,0']),
        ('contexts', ['3,1']),
        ('threads', 0),
    ])
    def test_invalid(self, field, value):
        serializer = RunConfigSerializer(data=RunConfigFactory(**{field: value}))
        assert not serializer.is_valid()
        assert field in serializer.errors

    def test_target_system_mismatch(self):
        serializer = RunConfigSerializer(data=RunConfigFactory(system='a2', target='B2'))
        assert not serializer.is_valid()
        assert 'target' in serializer.errors

    def test_parse_context(self):
        assert parse_context(' 7/3 , 5/7 ') == (Fraction(7, 3), Fraction(5, 7))
        with pytest.raises(ValueError):
            parse_context('1/2')
