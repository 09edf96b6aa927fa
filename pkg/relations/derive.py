"""
Derivación de los coeficientes: funciones simétricas elementales de las
integrales cuánticas y su expresión como polinomio en la base (L1, L2, L3)
o (L, M) por descenso en el orden.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

import sympy

from cm_catalog import a2_I, b2_Ix, b2_Iy, get_system
from diff_op import (
    DiffOp,
    SymbolPoly,
    op_add,
    op_commutator,
    op_scale,
    op_weighted_degree,
    principal_symbol,
    symbol_is_constant,
)
from elliptic_ring import EllipticMonomial, EllipticPoly, Inhomogeneous, g_monomial
from numeric_eval import vanishing_oracle

from .abstract import AbstractIntegralPoly
from .evaluate import OperatorMemo, ProductBuilder
from .exceptions import DescentStalledError, NotExpressibleError

logger = logging.getLogger(__name__)


@dataclass
class ElementarySymmetric:
    """Valores operador de los coeficientes (A1, A2, A3) o (B1, B2)"""

    system: str
    values: list
    commuting: bool
    notes: list = field(default_factory=list)


A2_INTEGRALS = {'I12': 'a2_I12', 'I23': 'a2_I23', 'I31': 'a2_I31'}
B2_INTEGRALS = {'Ix': 'b2_Ix', 'Iy': 'b2_Iy'}


def _commute(pairs, contexts, trials, seed, executor, blocks):
    for a, b in pairs:
        residual = op_commutator(a, b, executor=executor, blocks=blocks)
        if residual.is_zero():
            continue
        if not vanishing_oracle(contexts, residual, trials, seed, executor=executor).passed:
            return False
    return True


def _symmetrized(builder, names, n):
    """Promedio de los productos en todos los órdenes"""
    orders = list(permutations(names))
    total = DiffOp.zero(n)
    for order in orders:
        total = op_add(total, builder(tuple((name, 1) for name in order)))
    return op_scale(Fraction(1, len(orders)), total)


def derive_elementary_symmetric(system, contexts, trials, seed, memo=None, executor=None, blocks=1):
    """
    A2: A1 = −(I12+I23+I31), A2 = Σ Iij∘Ikl, A3 = −I12∘I23∘I31.
    B2: B1 = −(Ix²+Iy²), B2 = Ix²∘Iy².
    Si el oráculo no certifica que las integrales conmutan se usan los
    productos simetrizados y se anota.
    """
    memo = memo if memo is not None else OperatorMemo()
    if system == 'a2':
        binding = {'I12': a2_I('12'), 'I23': a2_I('23'), 'I31': a2_I('31')}
        labels = A2_INTEGRALS
    else:
        binding = {'Ix': b2_Ix(), 'Iy': b2_Iy()}
        labels = B2_INTEGRALS
    n = next(iter(binding.values())).n
    names = list(binding)
    builder = ProductBuilder(binding, n, labels, memo, executor, blocks)
    ops = [binding[name] for name in names]
    commuting = _commute(
        [(ops[i], ops[j]) for i in range(len(ops)) for j in range(i + 1, len(ops))],
        contexts, trials, seed, executor, blocks,
    )
    notes = []
    if not commuting:
        notes.append('integrales no certificadas como conmutativas: productos simetrizados')
        logger.warning("Integrales de %s sin conmutar certificadamente; se simetriza", system)

    if system == 'a2':
        e1 = op_add(op_add(ops[0], ops[1]), ops[2])
        pairs = [(names[0], names[1]), (names[0], names[2]), (names[1], names[2])]
        if commuting:
            e2 = DiffOp.zero(n)
            for a, b in pairs:
                e2 = op_add(e2, builder(((a, 1), (b, 1))))
            e3 = builder(tuple((name, 1) for name in names))
        else:
            e2 = DiffOp.zero(n)
            for pair in pairs:
                e2 = op_add(e2, _symmetrized(builder, pair, n))
            e3 = _symmetrized(builder, names, n)
        values = [-e1, e2, -e3]
    else:
        e1 = op_add(builder((('Ix', 2),)), builder((('Iy', 2),)))
        product = builder((('Ix', 2), ('Iy', 2)))
        if not commuting:
            product = op_scale(Fraction(1, 2), op_add(product, builder((('Iy', 2), ('Ix', 2)))))
        values = [-e1, product]
    return ElementarySymmetric(system, values, commuting, notes)


def _monomials(weights, k):
    """Vectores de exponentes con Σ e_j·w_j = k"""
    if not weights:
        if k == 0:
            yield ()
        return
    head, rest = weights[0], weights[1:]
    for e in range(k // head + 1):
        for tail in _monomials(rest, k - e * head):
            yield (e,) + tail


def _g_monomials(weight):
    """(a, b) con 4a + 6b = weight"""
    if weight < 0:
        return []
    return [(a, (weight - 4 * a) // 6) for a in range(weight // 4 + 1) if (weight - 4 * a) % 6 == 0]


def _to_fraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _solve(matrix_rows, rhs, order):
    """Solución racional exacta de M·x = b; la parte libre se fija a cero"""
    M = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in matrix_rows])
    b = sympy.Matrix([sympy.Rational(v.numerator, v.denominator) for v in rhs])
    try:
        solution, params = M.gauss_jordan_solve(b)
    except ValueError:
        raise NotExpressibleError(
            f"Sistema lineal sin solución en orden {order}", order=order,
        ) from None
    if params.shape[0]:
        logger.warning("Núcleo no trivial en orden %s (dimensión %s); libres a cero", order, params.shape[0])
        solution = solution.subs({p: 0 for p in params})
    return [_to_fraction(v) for v in solution]


@dataclass
class DescentStep:
    order: int
    path: str
    monomials: list


def express_in_integrals(target, basis, system, contexts, trials, seed, memo=None,
                         labels=None, executor=None, blocks=1, trace=None):
    """
    Escribe target como polinomio en la base [(nombre, DiffOp)] con
    coeficientes en Q[g2, g3], bajando del orden máximo al cero. En cada
    orden el símbolo debe ser constante (estructural o numéricamente); los
    coeficientes se obtienen resolviendo exactamente un sistema lineal
    racional por cada monomio en g2, g3.
    """
    names = [name for name, _ in basis]
    binding = dict(basis)
    weights = []
    for name, op in basis:
        if op_weighted_degree(op) != op.order:
            raise NotExpressibleError(f"El generador {name} no es homogéneo de peso igual a su orden")
        weights.append(op.order)
    total_weight = op_weighted_degree(target)
    if isinstance(total_weight, Inhomogeneous):
        raise NotExpressibleError(f"El operador no es homogéneo: {total_weight}")

    half_periods = get_system(system).half_periods
    builder = ProductBuilder(binding, target.n, labels, memo, executor, blocks)
    generators = tuple(names) + ('g2', 'g3')
    symbols = {name: principal_symbol(op) for name, op in basis}
    for name, s in symbols.items():
        if not all(c.is_scalar() for c in s.terms.values()):
            raise NotExpressibleError(f"El símbolo de {name} no es escalar")

    result = AbstractIntegralPoly(generators)
    remainder = target
    previous = None
    while not remainder.is_zero():
        k = remainder.order
        if previous is not None and k >= previous:
            raise DescentStalledError(f"El orden no bajó de {previous}", order=k)
        previous = k
        top = SymbolPoly(remainder.n, remainder.part(k).terms)
        constancy = symbol_is_constant(top, half_periods, contexts, trials, seed, executor)
        if not constancy:
            raise NotExpressibleError(
                f"Símbolo no constante en orden {k}", order=k, witness=constancy.witness,
            )
        value = constancy.value
        g_weight = total_weight - k
        g_monos = _g_monomials(g_weight)
        allowed = {EllipticMonomial((), a, b) for a, b in g_monos}
        for coeff in value.terms.values():
            stray = [m for m in coeff.terms if m not in allowed]
            if stray:
                raise NotExpressibleError(
                    f"Coeficiente fuera de peso en orden {k}", order=k, witness=coeff,
                )

        monos = list(_monomials(weights, k)) if g_monos else []
        used = []
        if value.terms and monos:
            mono_symbols = []
            for exps in monos:
                s = SymbolPoly(target.n, {(0,) * target.n: 1})
                for name, e in zip(names, exps):
                    if e:
                        s = s * symbols[name] ** e
                mono_symbols.append(s)
            rows = sorted(set(value.terms).union(*(s.terms for s in mono_symbols)))
            matrix = [[s.terms.get(alpha, EllipticPoly()).scalar_value() for s in mono_symbols]
                      for alpha in rows]
            coefficients = [EllipticPoly() for _ in monos]
            for a, b in g_monos:
                mono = EllipticMonomial((), a, b)
                rhs = [value.terms.get(alpha, EllipticPoly()).terms.get(mono, Fraction(0))
                       for alpha in rows]
                if not any(rhs):
                    continue
                for j, x in enumerate(_solve(matrix, rhs, k)):
                    if x:
                        coefficients[j] = coefficients[j] + g_monomial(a, b, x)
                        result = result + AbstractIntegralPoly(generators, {monos[j] + (a, b): x})
            for exps, coeff in zip(monos, coefficients):
                if coeff:
                    used.append(exps)
                    product = builder(tuple(zip(names, exps)))
                    remainder = op_add(remainder, -op_scale(coeff, product))
        elif value.terms:
            raise NotExpressibleError(
                f"Símbolo constante no nulo sin monomios de la base en orden {k}", order=k,
            )

        leftover = remainder.part(k)
        if not leftover.is_zero():
            check = vanishing_oracle(contexts, leftover, trials, seed, executor=executor)
            if not check.passed:
                raise DescentStalledError(
                    f"La parte de orden {k} no se anuló tras restar ({check.status})", order=k,
                )
            remainder = remainder.without_order(k)
        logger.info("Descenso: orden %s (%s), %s monomios", k, constancy.path, len(used))
        if trace is not None:
            trace.append(DescentStep(k, constancy.path, used))
    return result
