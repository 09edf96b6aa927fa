"""
Símbolos principales

Convención formal: ∂_j ↦ ξ_j sin unidad imaginaria, de modo que el símbolo
de −Δ es −(ξ1² + … + ξn²).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from elliptic_ring import EllipticPoly, NonSymmetricError, reduce_symmetric, specialize_half_periods, poly_mul

from .exceptions import ZeroOperatorError

logger = logging.getLogger(__name__)

SYMBOL_CONVENTION = 'formal: ∂_j ↦ ξ_j (sin factor i)'


class SymbolPoly:
    """Polinomio homogéneo en ξ con coeficientes EllipticPoly"""

    __slots__ = ('n', 'terms')

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for alpha, coeff in (terms or {}).items():
            if not isinstance(coeff, EllipticPoly):
                coeff = EllipticPoly.constant(coeff)
            if coeff:
                self.terms[tuple(alpha)] = coeff
        degrees = {sum(alpha) for alpha in self.terms}
        if len(degrees) > 1:
            raise ValueError(f"Símbolo no homogéneo en ξ: grados {sorted(degrees)}")

    @property
    def degree(self):
        return sum(next(iter(self.terms))) if self.terms else -1

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SymbolPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        terms = dict(self.terms)
        for alpha, coeff in other.terms.items():
            terms[alpha] = terms.get(alpha, EllipticPoly()) + coeff
        return SymbolPoly(self.n, terms)

    def __neg__(self):
        return SymbolPoly(self.n, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SymbolPoly):
            return SymbolPoly(self.n, {a: c * other for a, c in self.terms.items()})
        terms = {}
        for a1, c1 in self.terms.items():
            for a2, c2 in other.terms.items():
                alpha = tuple(x + y for x, y in zip(a1, a2))
                terms[alpha] = terms.get(alpha, EllipticPoly()) + poly_mul(c1, c2)
        return SymbolPoly(self.n, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = SymbolPoly(self.n, {(0,) * self.n: 1})
        for _ in range(k):
            result = result * self
        return result

    def sorted_terms(self):
        return sorted(self.terms.items())

    def evaluate(self, xi):
        """Valor en un covector racional ξ (coeficientes escalares)"""
        total = EllipticPoly()
        for alpha, coeff in self.terms.items():
            factor = Fraction(1)
            for x, k in zip(xi, alpha):
                factor *= Fraction(x) ** k
            total = total + coeff.scale(factor)
        return total

    def derivative(self, var):
        """∂/∂ξ_var (sale del invariante de homogeneidad sólo en grado)"""
        terms = {}
        for alpha, coeff in self.terms.items():
            if alpha[var]:
                lowered = list(alpha)
                lowered[var] -= 1
                terms[tuple(lowered)] = coeff.scale(alpha[var])
        return SymbolPoly(self.n, terms)

    def __repr__(self):
        return f"SymbolPoly(n={self.n}, degree={self.degree}, terms={len(self.terms)})"


def principal_symbol(a):
    """Parte de orden máximo con ∂ ↦ ξ"""
    if a.is_zero():
        raise ZeroOperatorError("El operador cero no tiene símbolo principal")
    top = a.order
    return SymbolPoly(a.n, {alpha: c for alpha, c in a.terms.items() if sum(alpha) == top})


@dataclass
class ConstancyResult:
    constant: bool
    path: str = None  # 'structural' | 'numeric' | None
    witness: EllipticPoly = None
    value: SymbolPoly = None
    max_ratio: float = 0.0

    def __bool__(self):
        return self.constant


def symbol_is_constant(s, half_periods=None, contexts=None, trials=4, seed=0, executor=None):
    """
    Constante estructuralmente (coeficientes libres de ℘ y ℘′) o, si se dan
    semiperiodos y contextos, constante certificada numéricamente: el valor
    exacto sale de la especialización en semiperiodos y la reducción simétrica,
    y el oráculo confirma coeficiente − valor = 0.
    """
    offending = [(alpha, c) for alpha, c in s.sorted_terms() if not c.is_constant()]
    if not offending:
        return ConstancyResult(True, 'structural', value=s)
    if half_periods is None or not contexts:
        return ConstancyResult(False, witness=offending[0][1])

    from numeric_eval import vanishing_oracle

    exact = {}
    for alpha, coeff in s.terms.items():
        if coeff.is_constant():
            exact[alpha] = coeff
            continue
        try:
            exact[alpha] = reduce_symmetric(specialize_half_periods(coeff, half_periods))
        except NonSymmetricError:
            return ConstancyResult(False, witness=coeff)
    differences = {alpha: s.terms[alpha] - exact[alpha] for alpha, _ in offending}
    result = vanishing_oracle(
        contexts, {str(list(a)): d for a, d in differences.items()}, trials, seed,
        executor=executor, n_vars=s.n,
    )
    if not result.passed:
        worst = max(result.details, key=lambda d: d.max_ratio, default=None)
        if worst is None:
            logger.info("Símbolo sin certificar: %s", result.message or result.status)
            return ConstancyResult(False, witness=offending[0][1], max_ratio=result.max_ratio)
        logger.info("Símbolo no constante: coeficiente %s, razón %.3e", worst.coefficient_multiindex, worst.max_ratio)
        witness = next(c for a, c in offending if str(list(a)) == worst.coefficient_multiindex)
        return ConstancyResult(False, witness=witness, max_ratio=result.max_ratio)
    return ConstancyResult(True, 'numeric', value=SymbolPoly(s.n, exact), max_ratio=result.max_ratio)
