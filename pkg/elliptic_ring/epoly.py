"""
Especialización en semiperiodos y reducción simétrica

En x = ω_i se cumple ℘′ = 0 y ℘ = e_i, con e1, e2, e3 raíces de
4z³ − g2·z − g3. Las relaciones de Vieta son e1+e2+e3 = 0,
e1e2+e1e3+e2e3 = −g2/4, e1e2e3 = g3/4.
"""

import enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exceptions import NonSymmetricError, UncoveredArgumentError
from .poly import EllipticPoly, g_monomial


class HalfPeriod(enum.IntEnum):
    E1 = 0
    E2 = 1
    E3 = 2


class EPoly:
    """Polinomio {(e1, e2, e3, g2, g3): Fraction} sin coeficientes nulos"""

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        self.terms = {k: Fraction(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def root(cls, index):
        exps = [0, 0, 0, 0, 0]
        exps[int(index)] = 1
        return cls({tuple(exps): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, EPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return EPoly(terms)

    def __neg__(self):
        return EPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, EPoly):
            return EPoly({k: c * Fraction(other) for k, c in self.terms.items()})
        terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return EPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = EPoly({(0, 0, 0, 0, 0): 1})
        for _ in range(k):
            result = result * self
        return result

    def permute_roots(self, perm):
        """Aplica la permutación e_i -> e_perm[i]"""
        terms = {}
        for (a1, a2, a3, b, c), coeff in self.terms.items():
            exps = [0, 0, 0]
            for i, a in enumerate((a1, a2, a3)):
                exps[perm[i]] += a
            terms[(*exps, b, c)] = coeff
        return EPoly(terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def monomial_weights(self):
        return [2 * (k[0] + k[1] + k[2]) + 4 * k[3] + 6 * k[4] for k in self.terms]

    def __str__(self):
        if not self.terms:
            return '0'
        chunks = []
        for key, coeff in self.sorted_terms():
            names = [
                f"{name}^{e}" if e > 1 else name
                for name, e in zip(('e1', 'e2', 'e3', 'g2', 'g3'), key) if e
            ]
            chunks.append(f"{coeff}·{'·'.join(names)}" if names else str(coeff))
        return ' + '.join(chunks)

    __repr__ = __str__


def specialize_half_periods(p, assignment):
    """
    ℘′ ↦ 0, ℘(a) ↦ e_asignado; g2 y g3 pasan intactos.
    assignment: {Argument: HalfPeriod}
    """
    terms = {}
    for mono, coeff in p.terms.items():
        exps = [0, 0, 0, mono.g2_exp, mono.g3_exp]
        dropped = False
        for arg, p_exp, pp_exp in mono.factors:
            if arg not in assignment:
                raise UncoveredArgumentError(arg)
            if pp_exp:
                dropped = True
                continue
            exps[int(assignment[arg])] += p_exp
        if dropped:
            continue
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return EPoly(terms)


@lru_cache(maxsize=None)
def _reduce_e1_e2(a, b):
    """
    Forma normal de e1^a·e2^b módulo Vieta, en la base e1^i·e2^j (i ≤ 2, j ≤ 1).
    Devuelve tupla de ((i, j, dg2, dg3), coef).
    """
    if b >= 2:
        # e2² = g2/4 − e1² − e1e2
        parts = (
            ((a, b - 2, 1, 0), Fraction(1, 4)),
            ((a + 2, b - 2, 0, 0), Fraction(-1)),
            ((a + 1, b - 1, 0, 0), Fraction(-1)),
        )
    elif a >= 3:
        # e1³ = g2·e1/4 + g3/4
        parts = (
            ((a - 2, b, 1, 0), Fraction(1, 4)),
            ((a - 3, b, 0, 1), Fraction(1, 4)),
        )
    else:
        return (((a, b, 0, 0), Fraction(1)),)
    out = {}
    for (i, j, dg2, dg3), coeff in parts:
        for (i2, j2, eg2, eg3), c2 in _reduce_e1_e2(i, j):
            key = (i2, j2, dg2 + eg2, dg3 + eg3)
            out[key] = out.get(key, 0) + coeff * c2
    return tuple((k, c) for k, c in out.items() if c)


def vieta_normal_form(p):
    """Forma normal de un EPoly módulo las relaciones de Vieta"""
    terms = {}
    for (a1, a2, a3, b, c), coeff in p.terms.items():
        # e3 = −e1 − e2
        for k in range(a3 + 1):
            binom = comb(a3, k) * (-1) ** a3
            for (i, j, dg2, dg3), c2 in _reduce_e1_e2(a1 + k, a2 + a3 - k):
                key = (i, j, 0, b + dg2, c + dg3)
                terms[key] = terms.get(key, 0) + coeff * binom * c2
    return EPoly(terms)


def reduce_symmetric(p):
    """
    Reescribe un polinomio simétrico en e1, e2, e3 como polinomio en g2, g3.
    Un residuo con e_i tras la forma normal significa que no era simétrico.
    """
    normal = vieta_normal_form(p)
    remainder = EPoly({k: c for k, c in normal.terms.items() if k[0] or k[1]})
    if remainder:
        raise NonSymmetricError(remainder)
    result = EllipticPoly()
    for (_, _, _, b, c), coeff in normal.terms.items():
        result = result + g_monomial(b, c, coeff)
    return result
