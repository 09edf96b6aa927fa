"""
Coeficientes impresos A1..A3 (A2) y B1, B2 (B2) y las relaciones que los usan
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from .abstract import AbstractIntegralPoly, RelationPolynomial

logger = logging.getLogger(__name__)

A2_GENERATORS = ('L1', 'L2', 'L3', 'g2', 'g3')
B2_GENERATORS = ('L', 'M', 'g2', 'g3')

A2_WEIGHTS = {'L1': 2, 'L2': 1, 'L3': 3, 'I': 4, 'J': 4}
B2_WEIGHTS = {'L': 2, 'M': 4, 'I': 5, 'J': 5}

A2_CUBIC_WEIGHT = 12
B2_QUARTIC_WEIGHT = 20


def a2_auxiliaries():
    """X y Y, los polinomios auxiliares de pesos 2 y 6"""
    L1, L2, L3, _, _ = AbstractIntegralPoly.gens(A2_GENERATORS)
    half = Fraction(1, 2)
    X = Fraction(3, 2) * L1 + half * L2 ** 2
    Y = (
        half * L1 ** 3 + 27 * L3 ** 2 + Fraction(1, 4) * L2 ** 6 + L1 * L2 ** 4
        - 5 * L2 ** 3 * L3 + Fraction(5, 4) * L1 ** 2 * L2 ** 2 - 9 * L1 * L2 * L3
    )
    return X, Y


def build_A_coefficients():
    """(A1, A2, A3) tal como están impresos"""
    _, _, _, g2, g3 = AbstractIntegralPoly.gens(A2_GENERATORS)
    X, Y = a2_auxiliaries()
    A1 = 6 * g2 - X ** 2
    A2 = 2 * X * Y - 15 * g2 ** 2 - 2 * g2 * X ** 2
    A3 = (
        -Y ** 2 - 2 * g2 * X * Y - 108 * g3 * Y + 16 * g3 * X ** 3
        + 15 * g2 ** 2 * X ** 2 - 100 * g2 ** 3
    )
    return A1, A2, A3


# (coeficiente, exp L, exp M, exp g2, exp g3), en el orden impreso
B1_TERMS = (
    (32, 5, 0, 0, 0), (-120, 3, 1, 0, 0), (120, 1, 2, 0, 0),
    (-82, 3, 0, 1, 0), (114, 1, 1, 1, 0),
    (-270, 2, 0, 0, 1), (486, 0, 1, 0, 1),
    (102, 1, 0, 2, 0),
    (486, 0, 0, 1, 1),
)

B2_TERMS = (
    (400, 4, 3, 0, 0), (-1440, 2, 4, 0, 0), (1296, 0, 5, 0, 0),
    (-400, 6, 1, 1, 0), (840, 4, 2, 1, 0), (-576, 2, 3, 1, 0), (648, 0, 4, 1, 0),
    (800, 7, 0, 0, 1), (-8280, 5, 1, 0, 1), (22032, 3, 2, 0, 1), (-17496, 1, 3, 0, 1),
    (800, 6, 0, 2, 0), (-1815, 4, 1, 2, 0), (3510, 2, 2, 2, 0), (-3807, 0, 3, 2, 0),
    (3870, 5, 0, 1, 1), (324, 3, 1, 1, 1), (-13122, 1, 2, 1, 1),
    (18225, 4, 0, 0, 2), (-65610, 2, 1, 0, 2), (59049, 0, 2, 0, 2),
    (-2930, 4, 0, 3, 0), (5418, 2, 1, 3, 0), (-4536, 0, 2, 3, 0),
    (-21708, 3, 0, 2, 1), (26244, 1, 1, 2, 1),
    (-65610, 2, 0, 1, 3), (118098, 0, 1, 1, 3),
    (2772, 2, 0, 4, 0), (-1539, 0, 1, 4, 0),
    (21870, 1, 0, 3, 1),
    (59049, 0, 0, 2, 2),
    (-162, 0, 0, 5, 0),
)


@dataclass(frozen=True)
class BCoefficients:
    B1: AbstractIntegralPoly
    B2: AbstractIntegralPoly
    flagged: tuple  # términos (exps, coeficiente, peso) fuera del peso esperado

    def __iter__(self):
        return iter((self.B1, self.B2))


def _from_rows(rows):
    return AbstractIntegralPoly(B2_GENERATORS, {tuple(row[1:]): row[0] for row in rows})


def build_B_coefficients():
    """
    B1 y B2 impresos. B2 conserva tal cual el término g3³g2(−65610L² + 118098M),
    de peso 26 en vez de 20, y se señala en flagged.
    """
    B1 = _from_rows(B1_TERMS)
    B2 = _from_rows(B2_TERMS)
    flagged = []
    for poly, expected in ((B1, 10), (B2, B2_QUARTIC_WEIGHT)):
        for exps, coeff in poly.sorted_terms():
            weight = poly.weight_of(exps, B2_WEIGHTS)
            if weight != expected:
                flagged.append((poly.monomial_text(exps), coeff, weight))
    for text, coeff, weight in flagged:
        logger.warning("Término impreso fuera de peso: %s·%s (peso %s)", coeff, text, weight)
    return BCoefficients(B1, B2, tuple(flagged))


def build_a2_relations():
    """Cúbica Q(I) = I³ + A1 I² + A2 I + A3 y relación de pares en (I, J)"""
    generators = A2_GENERATORS[:3] + ('I', 'J') + A2_GENERATORS[3:]
    I = AbstractIntegralPoly.generator('I', generators)
    J = AbstractIntegralPoly.generator('J', generators)
    A1, A2, A3 = (a.with_generators(generators) for a in build_A_coefficients())
    cubic = I ** 3 + A1 * I ** 2 + A2 * I + A3
    pair = I ** 2 + I * J + J ** 2 + A1 * (I + J) + A2
    return (
        RelationPolynomial.from_poly(cubic.with_generators(generators), ('I',)),
        RelationPolynomial.from_poly(pair.with_generators(generators), ('I', 'J')),
    )


def build_b2_relations(coefficients=None):
    """Cuártica I⁴ + B1 I² + B2 y relación de suma I² + J² + B1"""
    generators = B2_GENERATORS[:2] + ('I', 'J') + B2_GENERATORS[2:]
    B1, B2 = coefficients or build_B_coefficients()
    B1 = B1.with_generators(generators)
    B2 = B2.with_generators(generators)
    I = AbstractIntegralPoly.generator('I', generators)
    J = AbstractIntegralPoly.generator('J', generators)
    quartic = I ** 4 + B1 * I ** 2 + B2
    total = I ** 2 + J ** 2 + B1
    return (
        RelationPolynomial.from_poly(quartic.with_generators(generators), ('I',)),
        RelationPolynomial.from_poly(total.with_generators(generators), ('I', 'J')),
    )
