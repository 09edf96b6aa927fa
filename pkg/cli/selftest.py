"""
Suites de invariantes del motor que ejecuta `cmspec selftest`
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from cm_catalog import a2_I, a2_L1, b2_Ix, b2_L
from diff_op import DiffOp, op_add, op_commutator, op_compose, op_scale
from elliptic_ring import (
    Argument,
    EPoly,
    differentiate,
    g2,
    g3,
    normalize,
    reduce_symmetric,
    wp,
    wp_prime,
)
from numeric_eval import (
    default_contexts,
    ode_residual_ratio,
    sample_points,
    solve_e_roots,
    threshold_for,
    wp_pair,
)
from scalars import ScalarDivisionError, parse_rational, rat_arith

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    message: str = ''


class _Suite:
    def __init__(self, name):
        self.name = name
        self.checks = 0
        self.failures = []

    def expect(self, condition, label):
        self.checks += 1
        if not condition:
            self.failures.append(label)

    def result(self):
        return SuiteResult(self.name, not self.failures, self.checks, ', '.join(self.failures))


def scalars_suite(config):
    suite = _Suite('scalars')
    suite.expect(rat_arith(Fraction(1, 2), Fraction(1, 3), 'add') == Fraction(5, 6), 'suma')
    suite.expect(rat_arith(Fraction(2, 3), Fraction(3, 4), 'mul') == Fraction(1, 2), 'producto')
    try:
        rat_arith(Fraction(1), Fraction(0), 'div')
        suite.expect(False, 'división por cero')
    except ScalarDivisionError:
        suite.expect(True, 'división por cero')
    try:
        parse_rational('2.5')
        suite.expect(False, 'rechazo de flotantes')
    except ValueError:
        suite.expect(True, 'rechazo de flotantes')
    return suite.result()


def elliptic_ring_suite(config):
    suite = _Suite('elliptic_ring')
    x, y = (1, 0, 0), (0, 1, -1)
    p, dp = wp(x), wp_prime(x)
    suite.expect(dp * dp == 4 * p ** 3 - g2() * p - g3(), 'forma normal de ℘′²')
    f = p * wp(y) + dp
    h = wp_prime(y) * p
    for var in range(3):
        lhs = differentiate(f * h, var)
        rhs = differentiate(f, var) * h + f * differentiate(h, var)
        suite.expect(lhs == rhs, f'Leibniz en x{var + 1}')
    suite.expect(
        differentiate(differentiate(f, 0), 2) == differentiate(differentiate(f, 2), 0),
        'parciales cruzadas',
    )
    e1, e2, e3 = (EPoly.root(i) for i in range(3))
    suite.expect(not reduce_symmetric(e1 + e2 + e3), 'e1 + e2 + e3 = 0')
    suite.expect(
        reduce_symmetric(e1 * e2 + e1 * e3 + e2 * e3) == g2().scale(Fraction(-1, 4)),
        'Σ e_i e_j = −g2/4',
    )
    suite.expect(reduce_symmetric(e1 * e2 * e3) == g3().scale(Fraction(1, 4)), 'e1e2e3 = g3/4')
    return suite.result()


def normal_form_suite(config):
    """normalize(normalize(p)) == normalize(p) sobre términos con ℘′ de exponente alto"""
    suite = _Suite('normal_form')
    rng = random.Random(f"normal_form:{config['seed']}")
    arguments = [Argument((1, 0)), Argument((0, 1)), Argument((1, 1)), Argument((1, -1))]
    for case in range(4):
        raw = []
        for _ in range(5):
            factors = {arg: (rng.randint(0, 2), rng.randint(0, 4)) for arg in rng.sample(arguments, 2)}
            raw.append((factors, rng.randint(0, 1), rng.randint(0, 1), Fraction(rng.randint(-6, 6) or 1)))
        once = normalize(raw)
        again = normalize([
            ({arg: (p, pp) for arg, p, pp in mono.factors}, mono.g2_exp, mono.g3_exp, coeff)
            for mono, coeff in once.terms.items()
        ])
        suite.expect(once == again, f'idempotencia {case}')
        suite.expect(
            all(pp <= 1 for mono in once.terms for _, _, pp in mono.factors),
            f'℘′ reducido {case}',
        )
    return suite.result()


def diff_op_suite(config):
    suite = _Suite('diff_op')
    n = 2
    a = op_add(DiffOp.partial(n, 0, 2), DiffOp.multiplication(n, wp((1, 1))))
    b = op_add(DiffOp.partial(n, 1), op_scale(wp_prime((1, 0)), DiffOp.identity(n)))
    c = op_add(DiffOp.partial(n, 0), DiffOp.multiplication(n, wp((0, 1))))
    suite.expect(
        op_compose(op_compose(a, b), c) == op_compose(a, op_compose(b, c)), 'asociatividad',
    )
    jacobi = op_add(
        op_add(op_commutator(a, op_commutator(b, c)), op_commutator(b, op_commutator(c, a))),
        op_commutator(c, op_commutator(a, b)),
    )
    suite.expect(jacobi.is_zero(), 'identidad de Jacobi')
    suite.expect(op_commutator(DiffOp.partial(n, 0), DiffOp.partial(n, 1)).is_zero(), '[∂x, ∂y] = 0')
    return suite.result()


def threading_suite(config):
    """Composición y conmutador por bloques en un pool: mismo resultado que en serie"""
    suite = _Suite('threading')
    workers = max(2, config.get('threads', 1))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        threaded = op_compose(a2_I('12'), a2_L1(), executor=pool, blocks=4)
        bracket = op_commutator(b2_L(), b2_Ix(), executor=pool, blocks=4)
    suite.expect(threaded == op_compose(a2_I('12'), a2_L1()), 'composición I12·L1')
    suite.expect(bracket == op_commutator(b2_L(), b2_Ix()), 'conmutador [L, I_x]')
    return suite.result()


def numeric_eval_suite(config):
    suite = _Suite('numeric_eval')
    contexts = default_contexts(config['precision_bits'])
    for ctx in contexts:
        bound = threshold_for(ctx.precision_bits)
        roots = solve_e_roots(ctx)
        total = sum((r.value for r in roots), ctx.mp.mpc(0))
        suite.expect(abs(total) <= bound, f'Σ e_i = 0 en {ctx.label}')
        for point in sample_points(ctx, 1, 3, config['seed']):
            z = point.to_mpc(ctx.mp, (1,))
            value, deriv = wp_pair(ctx, z)
            suite.expect(ode_residual_ratio(ctx, value, deriv) <= bound, f'EDO en {ctx.label}')
            minus_value, minus_deriv = wp_pair(ctx, -z)
            suite.expect(abs(minus_value - value) <= bound * abs(value), f'paridad de ℘ en {ctx.label}')
            suite.expect(abs(minus_deriv + deriv) <= bound * abs(deriv), f'paridad de ℘′ en {ctx.label}')
    return suite.result()


SUITES = (
    scalars_suite, elliptic_ring_suite, normal_form_suite, diff_op_suite, threading_suite,
    numeric_eval_suite,
)


def run_suites(config):
    results = []
    for suite in SUITES:
        result = suite(config)
        logger.info("Suite %s: %s (%s comprobaciones)", result.name,
                    'ok' if result.passed else 'FALLA', result.checks)
        results.append(result)
    return results
