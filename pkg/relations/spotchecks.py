"""
Comprobaciones puntuales sobre símbolos: separación de órbitas e independencia
"""

import logging
import random
import time
from fractions import Fraction
from itertools import permutations, product

import sympy

from numeric_eval import STATUS_FAIL, STATUS_PASS

from .verify import VerificationReport, elapsed_since

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 20


def orbit(system, xi):
    """Órbita de ξ bajo S3 (A2) o bajo permutaciones con signo (B2)"""
    if system == 'a2':
        return [tuple(xi[i] for i in perm) for perm in permutations(range(len(xi)))]
    points = []
    for perm in permutations(range(len(xi))):
        for signs in product((1, -1), repeat=len(xi)):
            points.append(tuple(s * xi[i] for s, i in zip(signs, perm)))
    return points


def _generic_point(rng, n):
    """ξ racional con coordenadas no nulas y de valores absolutos distintos"""
    for _ in range(MAX_ATTEMPTS):
        xi = tuple(
            Fraction(rng.randint(1, 97), rng.randint(1, 13)) * rng.choice((1, -1)) for _ in range(n)
        )
        if len({abs(x) for x in xi}) == n:
            return xi
    raise RuntimeError("No se encontró un punto genérico")


def separation_check(system, candidate, seed, expected=None, samples=3, name='candidate'):
    """
    Cuenta los valores distintos del símbolo candidato sobre la órbita de
    puntos genéricos. Con expected, pasa sólo si todas las muestras dan ese
    número.
    """
    started = time.perf_counter()
    rng = random.Random(f"{seed}:separation:{system}:{name}")
    details = []
    for _ in range(samples):
        xi = _generic_point(rng, candidate.n)
        values = {candidate.evaluate(point) for point in orbit(system, xi)}
        details.append({'label': name, 'xi': [str(x) for x in xi], 'distinct_values': len(values)})
    counts = {d['distinct_values'] for d in details}
    status = STATUS_PASS if expected is None or counts == {expected} else STATUS_FAIL
    logger.info("Separación de %s en %s: %s valores distintos", name, system, sorted(counts))
    return VerificationReport(
        check='separation', system=system, status=status, seed=seed,
        elapsed_ms=elapsed_since(started), details=details,
        notes=[f"esperado {expected}"] if expected is not None else [],
    )


def jacobian_rank(symbols, xi):
    """Rango exacto de la matriz ∂σ_i/∂ξ_j en ξ"""
    n = symbols[0].n
    rows = []
    for s in symbols:
        row = []
        for j in range(n):
            value = s.derivative(j).evaluate(xi)
            if not value.is_scalar():
                raise ValueError("El jacobiano sólo admite símbolos con coeficientes racionales")
            q = value.scalar_value()
            row.append(sympy.Rational(q.numerator, q.denominator))
        rows.append(row)
    return sympy.Matrix(rows).rank()


def symbol_independence_check(symbols, seed, samples=3):
    """
    Independencia algebraica por rango completo del jacobiano en varios puntos.
    Los puntos donde el rango cae se descartan y se remuestrea.
    """
    rng = random.Random(f"{seed}:independence:{len(symbols)}")
    full = 0
    for _ in range(MAX_ATTEMPTS):
        xi = _generic_point(rng, symbols[0].n)
        if jacobian_rank(symbols, xi) == len(symbols):
            full += 1
            if full == samples:
                return True
        else:
            logger.debug("Punto degenerado para el jacobiano: %s", xi)
    return False
