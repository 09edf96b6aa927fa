"""
Servicios de la línea de órdenes: verificaciones, derivaciones, autoprueba y caché
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor

from django.conf import settings
from rest_framework.renderers import JSONRenderer

from cm_catalog import (
    CATALOG,
    a2_I,
    a2_L1,
    a2_L2,
    a2_L3,
    a2_L4,
    b2_Ix,
    b2_Ix_printed,
    b2_Iy,
    b2_L,
    b2_L3,
    b2_M,
    get_system,
    ix_errata,
)
from diff_op import op_add, op_weighted_degree, principal_symbol, symbol_is_constant
from numeric_eval import STATUS_FAIL, STATUS_INCONCLUSIVE, STATUS_PASS, EllipticContext, vanishing_oracle
from relations import (
    A2_WEIGHTS,
    B2_WEIGHTS,
    BCoefficients,
    DescentStalledError,
    NotExpressibleError,
    OperatorMemo,
    ProductBuilder,
    VerificationReport,
    build_A_coefficients,
    build_B_coefficients,
    build_a2_relations,
    build_b2_relations,
    combine_status,
    derive_elementary_symmetric,
    diff_against_printed,
    evaluate_abstract,
    express_in_integrals,
    product_key,
    separation_check,
    sv_remark_check,
    symbol_independence_check,
    verify_commutators,
    verify_relation,
)
from relations.verify import elapsed_since

from .cache import DiskCache
from .serializers import (
    CHECK_CHOICES,
    DerivationReportSerializer,
    RunReportSerializer,
    VerificationReportSerializer,
    parse_context,
)

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_MISMATCH = 3
EXIT_DERIVATION_FAILED = 4
EXIT_USAGE = 64

SYSTEM_ORDER = ('a2', 'b2')

A2_BASIS_LABELS = {'L1': 'a2_L1', 'L2': 'a2_L2', 'L3': 'a2_L3'}
B2_BASIS_LABELS = {'L': 'b2_L', 'M': 'b2_M'}


def a2_basis():
    return [('L1', a2_L1()), ('L2', a2_L2()), ('L3', a2_L3())]


def b2_basis():
    return [('L', b2_L()), ('M', b2_M())]


class Runtime:
    """
    Estado de una ejecución: contextos, pool de hilos y memo de operadores.
    Se usa como context manager para cerrar el pool.
    """

    def __init__(self, config):
        self.config = config
        self.trials = config['trials']
        self.seed = config['seed']
        self.threads = config.get('threads', 1)
        self.contexts = [
            EllipticContext(*parse_context(text), precision_bits=config['precision_bits'])
            for text in config['contexts']
        ]
        self.executor = ThreadPoolExecutor(max_workers=self.threads) if self.threads > 1 else None
        cache_dir = config.get('cache_dir')
        if cache_dir:
            self.memo = DiskCache(cache_dir, settings.CMSPEC_CACHE_VERSION)
        else:
            self.memo = OperatorMemo()
        self._b2_coefficients = None

    @property
    def blocks(self):
        return self.threads

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        if self.executor is not None:
            self.executor.shutdown(wait=True)

    def oracle_kwargs(self):
        return dict(
            contexts=self.contexts, trials=self.trials, seed=self.seed,
            executor=self.executor, blocks=self.blocks,
        )

    def derived_b2_coefficients(self):
        """B1 y B2 derivados (no los impresos), calculados una vez por ejecución"""
        if self._b2_coefficients is None:
            symmetric = derive_elementary_symmetric(
                'b2', self.contexts, self.trials, self.seed, memo=self.memo,
                executor=self.executor, blocks=self.blocks,
            )
            derived = [
                express_in_integrals(
                    value, b2_basis(), 'b2', self.contexts, self.trials, self.seed,
                    memo=self.memo, labels=B2_BASIS_LABELS, executor=self.executor, blocks=self.blocks,
                )
                for value in symmetric.values
            ]
            self._b2_coefficients = BCoefficients(derived[0], derived[1], ())
        return self._b2_coefficients


# Verificaciones

def check_commutators(rt, system):
    return [verify_commutators(system, rt.contexts, rt.trials, rt.seed, rt.executor, rt.blocks)]


def _a2_binding(**integrals):
    binding = {'L1': a2_L1(), 'L2': a2_L2(), 'L3': a2_L3()}
    labels = dict(A2_BASIS_LABELS)
    for name, pair in integrals.items():
        binding[name] = a2_I(pair)
        labels[name] = f"a2_I{pair}"
    return binding, labels


def check_cubic(rt, system):
    """Q(L1, L2, L3, I) = 0 para I = I12, I23, I31"""
    cubic, _ = build_a2_relations()
    reports = []
    for pair in ('12', '23', '31'):
        binding, labels = _a2_binding(I=pair)
        reports.append(verify_relation(
            cubic, binding, check=f"cubic[I{pair}]", system='a2', labels=labels,
            memo=rt.memo, **rt.oracle_kwargs(),
        ))
    return reports


def check_pair(rt, system):
    """I² + IJ + J² + A1(I+J) + A2 = 0 para los tres pares cíclicos"""
    _, pair_relation = build_a2_relations()
    reports = []
    for first, second in (('12', '23'), ('23', '31'), ('31', '12')):
        binding, labels = _a2_binding(I=first, J=second)
        reports.append(verify_relation(
            pair_relation, binding, check=f"pair[I{first},I{second}]", system='a2',
            labels=labels, memo=rt.memo, **rt.oracle_kwargs(),
        ))
    return reports


def _b2_binding(**integrals):
    binding = {'L': b2_L(), 'M': b2_M()}
    labels = dict(B2_BASIS_LABELS)
    builders = {'Ix': b2_Ix, 'Iy': b2_Iy}
    for name, which in integrals.items():
        binding[name] = builders[which]()
        labels[name] = f"b2_{which}"
    return binding, labels


def _derived_note(rt):
    printed = build_B_coefficients()
    derived = rt.derived_b2_coefficients()
    diff = diff_against_printed(derived.B2, printed.B2, B2_WEIGHTS)
    return f"B1, B2 derivados; {len(diff)} términos de B2 difieren del impreso"


def _derivation_failed(rt, checks, exc):
    """Informes en fail cuando B1, B2 no se pueden derivar de L y M"""
    logger.error("No se pudieron derivar B1, B2: %s", exc)
    return [
        VerificationReport(
            check=check, system='b2', status=STATUS_FAIL, trials=rt.trials, seed=rt.seed,
            precision_bits=rt.contexts[0].precision_bits, contexts=[c.label for c in rt.contexts],
            notes=[f"B1, B2 no derivables: {exc}"],
        )
        for check in checks
    ]


def check_quartic(rt, system):
    """I⁴ + B1 I² + B2 = 0 con B1, B2 derivados, para I = I_x e I_y"""
    try:
        quartic, _ = build_b2_relations(rt.derived_b2_coefficients())
    except (NotExpressibleError, DescentStalledError) as exc:
        return _derivation_failed(rt, ('quartic[Ix]', 'quartic[Iy]'), exc)
    note = _derived_note(rt)
    reports = []
    for which in ('Ix', 'Iy'):
        binding, labels = _b2_binding(I=which)
        report = verify_relation(
            quartic, binding, check=f"quartic[{which}]", system='b2', labels=labels,
            memo=rt.memo, **rt.oracle_kwargs(),
        )
        report.notes.append(note)
        reports.append(report)
    return reports


def check_sum(rt, system):
    try:
        _, total = build_b2_relations(rt.derived_b2_coefficients())
    except (NotExpressibleError, DescentStalledError) as exc:
        return _derivation_failed(rt, ('sum[Ix,Iy]',), exc)
    binding, labels = _b2_binding(I='Ix', J='Iy')
    return [verify_relation(
        total, binding, check='sum[Ix,Iy]', system='b2', labels=labels,
        memo=rt.memo, **rt.oracle_kwargs(),
    )]


def check_sv_remark(rt, system):
    report, _ = sv_remark_check()
    return [report]


def check_separation(rt, system):
    """Un valor por órbita para la combinación simétrica; órbita completa para la separadora"""
    if system == 'a2':
        symmetric = principal_symbol(op_add(op_add(a2_I('12'), a2_I('23')), a2_I('31')))
        candidates = (('I12+I23+I31', symmetric, 1), ('I12+2I23', principal_symbol(a2_L4()), 6))
    else:
        sx, sy = principal_symbol(b2_Ix()), principal_symbol(b2_Iy())
        candidates = (('Ix^2+Iy^2', sx * sx + sy * sy, 1), ('Ix+2Iy', principal_symbol(b2_L3()), 8))
    reports = [
        separation_check(system, symbol, rt.seed, expected=expected, name=name)
        for name, symbol, expected in candidates
    ]
    merged = reports[0]
    for other in reports[1:]:
        merged.details.extend(other.details)
        merged.notes.extend(other.notes)
        merged.elapsed_ms += other.elapsed_ms
    merged.status = combine_status(r.status for r in reports)
    return [merged]


def check_independence(rt, system):
    started = time.perf_counter()
    basis = a2_basis() if system == 'a2' else b2_basis()
    symbols = [principal_symbol(op) for _, op in basis]
    independent = symbol_independence_check(symbols, rt.seed)
    return [VerificationReport(
        check='independence', system=system,
        status=STATUS_PASS if independent else STATUS_FAIL,
        seed=rt.seed, elapsed_ms=elapsed_since(started),
        details=[{'label': ','.join(name for name, _ in basis), 'status': STATUS_PASS if independent else STATUS_FAIL}],
    )]


def check_catalog(rt, system):
    """Homogeneidad ponderada y símbolo constante de cada operador del catálogo"""
    started = time.perf_counter()
    details = []
    for name, (builder, owner, weight) in CATALOG.items():
        if owner != system:
            continue
        op = builder()
        found = op_weighted_degree(op)
        constant = symbol_is_constant(principal_symbol(op))
        ok = found == weight and bool(constant)
        details.append({
            'label': name, 'status': STATUS_PASS if ok else STATUS_FAIL,
            'weight': str(found), 'expected_weight': weight, 'constant_symbol': bool(constant),
        })
    notes = []
    if system == 'b2':
        notes.append(f"I_x impreso: peso {op_weighted_degree(b2_Ix_printed())}; se usa la tabla reconstruida")
        notes.extend(f"fila {row}: {printed} -> {corrected}" for row, printed, corrected in ix_errata())
    return [VerificationReport(
        check='catalog', system=system,
        status=combine_status(d['status'] for d in details),
        seed=rt.seed, elapsed_ms=elapsed_since(started), structural_zero=True, details=details,
        notes=notes,
    )]


# nombre -> (función, sistemas a los que aplica)
CHECKS = {
    'commutators': (check_commutators, ('a2', 'b2')),
    'cubic': (check_cubic, ('a2',)),
    'pair': (check_pair, ('a2',)),
    'quartic': (check_quartic, ('b2',)),
    'sum': (check_sum, ('b2',)),
    'sv-remark': (check_sv_remark, ('a2',)),
    'separation': (check_separation, ('a2', 'b2')),
    'independence': (check_independence, ('a2', 'b2')),
    'catalog': (check_catalog, ('a2', 'b2')),
}


def selected_systems(system):
    return SYSTEM_ORDER if system == 'both' else (system,)


def exit_code_for(statuses):
    status = combine_status(statuses)
    return {STATUS_PASS: EXIT_PASS, STATUS_FAIL: EXIT_FAIL, STATUS_INCONCLUSIVE: EXIT_INCONCLUSIVE}[status]


def serialize_verification(report):
    data = dict(VerificationReportSerializer(report.as_dict()).data)
    if not settings.CMSPEC_REPORT_TIMINGS:
        data['elapsed_ms'] = 0
    return data


def run_verify(config):
    """Ejecuta las verificaciones elegidas; devuelve (código de salida, informes)"""
    checks = [c for c in CHECK_CHOICES if c in config['checks'] and c != 'all']
    reports = []
    with Runtime(config) as rt:
        for system in selected_systems(config['system']):
            for check in checks:
                function, systems = CHECKS[check]
                if system not in systems:
                    continue
                logger.info("Verificando %s en %s", check, system)
                for report in function(rt, system):
                    logger.info("%s/%s: %s", system, report.check, report.status)
                    reports.append(serialize_verification(report))
    return exit_code_for(r['status'] for r in reports), reports


# Derivación

def _target_setup(target):
    if target.startswith('A'):
        return 'a2', a2_basis, A2_BASIS_LABELS, A2_WEIGHTS, build_A_coefficients()[int(target[1]) - 1]
    printed = build_B_coefficients()
    return 'b2', b2_basis, B2_BASIS_LABELS, B2_WEIGHTS, (printed.B1, printed.B2)[int(target[1]) - 1]


def run_derive(config):
    """
    Deriva el coeficiente pedido, lo compara con el impreso y certifica la ida
    y vuelta. 0 si coincide, 3 si difiere, 4 si el descenso falla.
    """
    started = time.perf_counter()
    target = config['target']
    system, basis_factory, labels, weights, printed = _target_setup(target)
    index = int(target[1]) - 1
    report = {
        'target': target, 'system': system, 'status': 'failed', 'derived': '', 'derived_text': '',
        'weight': '', 'diff': [], 'flagged': [], 'commuting': True, 'round_trip': '',
        'descent': [], 'elapsed_ms': 0, 'notes': [],
    }
    if system == 'b2':
        report['flagged'] = [f"{coeff}*{text} (peso {w})" for text, coeff, w in build_B_coefficients().flagged]
    with Runtime(config) as rt:
        symmetric = derive_elementary_symmetric(
            system, rt.contexts, rt.trials, rt.seed, memo=rt.memo,
            executor=rt.executor, blocks=rt.blocks,
        )
        report['commuting'] = symmetric.commuting
        report['notes'].extend(symmetric.notes)
        value = symmetric.values[index]
        basis = basis_factory()
        trace = []
        try:
            derived = express_in_integrals(
                value, basis, system, rt.contexts, rt.trials, rt.seed, memo=rt.memo,
                labels=labels, executor=rt.executor, blocks=rt.blocks, trace=trace,
            )
        except (NotExpressibleError, DescentStalledError) as exc:
            witness = getattr(exc, 'witness', None)
            report['notes'].append(f"{exc}" + (f"; símbolo: {witness!r}" if witness is not None else ''))
            report['descent'] = [_step_dict(step) for step in trace]
            report['elapsed_ms'] = _elapsed(started)
            return EXIT_DERIVATION_FAILED, _serialize_derivation(report)

        binding = dict(basis)
        residual = op_add(evaluate_abstract(derived, binding, labels, rt.memo, rt.executor, rt.blocks), -value)
        round_trip = vanishing_oracle(rt.contexts, residual, rt.trials, rt.seed, executor=rt.executor)

    diff = diff_against_printed(derived, printed, weights)
    report.update({
        'status': 'mismatch' if diff else 'match',
        'derived': str(derived),
        'derived_text': derived.to_text(),
        'weight': str(derived.weighted_degree(weights)),
        'diff': [d.as_dict() for d in diff],
        'round_trip': round_trip.status,
        'descent': [_step_dict(step) for step in trace],
        'elapsed_ms': _elapsed(started),
    })
    return (EXIT_MISMATCH if diff else EXIT_PASS), _serialize_derivation(report)


def _step_dict(step):
    return {'order': step.order, 'path': step.path, 'monomials': [list(m) for m in step.monomials]}


def _elapsed(started):
    return elapsed_since(started) if settings.CMSPEC_REPORT_TIMINGS else 0


def _serialize_derivation(report):
    return dict(DerivationReportSerializer(report).data)


# Autoprueba y caché

def run_selftest(config):
    from .selftest import run_suites

    results = run_suites(config)
    code = EXIT_PASS if all(r.passed for r in results) else EXIT_FAIL
    return code, [
        {'suite': r.name, 'passed': r.passed, 'checks': r.checks, 'message': r.message}
        for r in results
    ]


def warm_cache(config):
    """Precalcula los productos caros de las integrales en la caché de disco"""
    with Runtime(config) as rt:
        keys = []
        for system in selected_systems(config['system']):
            if system == 'a2':
                binding = {'I12': a2_I('12'), 'I23': a2_I('23'), 'I31': a2_I('31')}
                labels = {'I12': 'a2_I12', 'I23': 'a2_I23', 'I31': 'a2_I31'}
                products = (
                    (('I12', 1), ('I23', 1)), (('I12', 1), ('I31', 1)),
                    (('I23', 1), ('I31', 1)), (('I12', 1), ('I23', 1), ('I31', 1)),
                )
            else:
                binding = {'Ix': b2_Ix(), 'Iy': b2_Iy()}
                labels = {'Ix': 'b2_Ix', 'Iy': 'b2_Iy'}
                products = ((('Ix', 2),), (('Iy', 2),), (('Ix', 2), ('Iy', 2)), (('Ix', 4),))
            n = get_system(system).n
            builder = ProductBuilder(binding, n, labels, rt.memo, rt.executor, rt.blocks)
            for factors in products:
                builder(factors)
                keys.append(product_key(factors, labels))
    return keys


def render_json(data):
    return JSONRenderer().render(data, renderer_context={'indent': 2})


def write_run_report(path, command, exit_code, config, reports):
    data = RunReportSerializer({
        'command': command, 'exit_code': exit_code, 'config': config, 'reports': reports,
    }).data
    with open(path, 'wb') as handle:
        handle.write(render_json(data))
        handle.write(b'\n')
