"""
Polinomios en forma normal sobre los símbolos de Weierstrass

Generadores: ℘(a), ℘′(a) para argumentos lineales a, más g2 y g3.
Forma normal: exponente de ℘′(a) a lo sumo 1 (℘′² = 4℘³ − g2℘ − g3) y
ninguna derivada de orden mayor (℘″ = 6℘² − g2/2).
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple

from .arguments import Argument, canonicalize_argument

WEIGHT_P = 2
WEIGHT_PP = 3
WEIGHT_G2 = 4
WEIGHT_G3 = 6


class EllipticMonomial(NamedTuple):
    """
    factors: tupla ordenada de (Argument, p_exp, pp_exp) sin exponentes nulos.
    El orden de tuplas coincide con el orden total de monomios.
    """

    factors: tuple
    g2_exp: int = 0
    g3_exp: int = 0

    @property
    def weight(self):
        total = WEIGHT_G2 * self.g2_exp + WEIGHT_G3 * self.g3_exp
        for _, p_exp, pp_exp in self.factors:
            total += WEIGHT_P * p_exp + WEIGHT_PP * pp_exp
        return total

    @property
    def arguments(self):
        return tuple(arg for arg, _, _ in self.factors)


ONE = EllipticMonomial(())


@lru_cache(maxsize=None)
def _cubic_power(q):
    """(4℘³ − g2℘ − g3)^q como tupla de (dp, dg2, dg3, coef)"""
    terms = []
    for i in range(q + 1):
        for j in range(q - i + 1):
            k = q - i - j
            multinomial = factorial(q) // (factorial(i) * factorial(j) * factorial(k))
            coeff = multinomial * 4 ** i * (-1) ** (j + k)
            terms.append((3 * i + j, j, k, coeff))
    return tuple(terms)


def _expand(factor_map, g2_exp, g3_exp, coeff):
    """
    Lleva a forma normal un producto dado como {Argument: [p, pp]}.
    Devuelve lista de (EllipticMonomial, coeficiente).
    """
    partial = [({}, g2_exp, g3_exp, Fraction(coeff))]
    for arg in sorted(factor_map):
        p_exp, pp_exp = factor_map[arg]
        q, r = divmod(pp_exp, 2)
        if not q:
            for factors, _, _, _ in partial:
                factors[arg] = (p_exp, r)
            continue
        grown = []
        for factors, a2, a3, c in partial:
            for dp, dg2, dg3, k in _cubic_power(q):
                new_factors = dict(factors)
                new_factors[arg] = (p_exp + dp, r)
                grown.append((new_factors, a2 + dg2, a3 + dg3, c * k))
        partial = grown
    result = []
    for factors, a2, a3, c in partial:
        items = tuple(
            (arg, p, pp) for arg, (p, pp) in sorted(factors.items()) if p or pp
        )
        result.append((EllipticMonomial(items, a2, a3), c))
    return result


@lru_cache(maxsize=1 << 20)
def _mul_monomials(left, right):
    factor_map = {arg: [p, pp] for arg, p, pp in left.factors}
    for arg, p, pp in right.factors:
        if arg in factor_map:
            factor_map[arg][0] += p
            factor_map[arg][1] += pp
        else:
            factor_map[arg] = [p, pp]
    return tuple(_expand(factor_map, left.g2_exp + right.g2_exp, left.g3_exp + right.g3_exp, 1))


@lru_cache(maxsize=1 << 20)
def _diff_monomial(mono, var):
    """Regla de la cadena sobre un monomio en forma normal"""
    out = Counter()
    base = {arg: [p, pp] for arg, p, pp in mono.factors}
    for arg, p_exp, pp_exp in mono.factors:
        a = arg.coeffs[var]
        if not a:
            continue
        if p_exp:
            # d℘^p = p·℘^(p−1)·℘′·a
            factor_map = {k: list(v) for k, v in base.items()}
            factor_map[arg] = [p_exp - 1, pp_exp + 1]
            for m, c in _expand(factor_map, mono.g2_exp, mono.g3_exp, p_exp * a):
                out[m] += c
        if pp_exp:
            # d℘′ = a·(6℘² − g2/2)
            factor_map = {k: list(v) for k, v in base.items()}
            factor_map[arg] = [p_exp + 2, 0]
            for m, c in _expand(factor_map, mono.g2_exp, mono.g3_exp, 6 * a):
                out[m] += c
            factor_map = {k: list(v) for k, v in base.items()}
            factor_map[arg] = [p_exp, 0]
            for m, c in _expand(factor_map, mono.g2_exp + 1, mono.g3_exp, Fraction(-a, 2)):
                out[m] += c
    return tuple((m, c) for m, c in out.items() if c)


class EllipticPoly:
    """
    Polinomio inmutable {EllipticMonomial: Fraction} en forma normal,
    sin coeficientes nulos.
    """

    __slots__ = ('terms', '_hash')

    def __init__(self, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            if coeff:
                clean[mono] = Fraction(coeff)
        self.terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, terms):
        poly = cls.__new__(cls)
        poly.terms = terms
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, value):
        return cls({ONE: value})

    # Consultas

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        """Libre de ℘ y ℘′ (puede contener g2, g3)"""
        return all(not mono.factors for mono in self.terms)

    def is_scalar(self):
        return all(mono == ONE for mono in self.terms)

    def scalar_value(self):
        return self.terms.get(ONE, Fraction(0))

    def arguments(self):
        found = set()
        for mono in self.terms:
            found.update(mono.arguments)
        return sorted(found)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = EllipticPoly.constant(other)
        if not isinstance(other, EllipticPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # Aritmética

    def __add__(self, other):
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return EllipticPoly._trusted({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return poly_add(self, -_coerce(other))

    def __rsub__(self, other):
        return poly_add(_coerce(other), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, EllipticPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = EllipticPoly.constant(1)
        for _ in range(k):
            result = poly_mul(result, self)
        return result

    def scale(self, factor):
        factor = Fraction(factor)
        if not factor:
            return EllipticPoly()
        return EllipticPoly._trusted({m: c * factor for m, c in self.terms.items()})

    def __repr__(self):
        return f"EllipticPoly({to_text(self)!r})"


def _coerce(value):
    if isinstance(value, EllipticPoly):
        return value
    return EllipticPoly.constant(value)


def poly_add(a, b):
    """Suma término a término"""
    if len(a.terms) < len(b.terms):
        a, b = b, a
    terms = dict(a.terms)
    for mono, coeff in b.terms.items():
        total = terms.get(mono, 0) + coeff
        if total:
            terms[mono] = total
        else:
            terms.pop(mono, None)
    return EllipticPoly._trusted(terms)


def poly_mul(a, b):
    """Producto en forma normal"""
    terms = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            c12 = c1 * c2
            for mono, k in _mul_monomials(m1, m2):
                terms[mono] = terms.get(mono, 0) + c12 * k
    return EllipticPoly._trusted({m: c for m, c in terms.items() if c})


def normalize(raw_terms):
    """
    Forma normal de una lista de (factores, g2, g3, coef) donde los factores
    {Argument: (p, pp)} pueden traer cualquier exponente de ℘′.
    """
    terms = {}
    for factor_map, g2_exp, g3_exp, coeff in raw_terms:
        expanded = _expand({a: list(v) for a, v in factor_map.items()}, g2_exp, g3_exp, coeff)
        for mono, c in expanded:
            terms[mono] = terms.get(mono, 0) + c
    return EllipticPoly(terms)


def differentiate(p, var):
    """∂/∂x_var con la regla de la cadena"""
    terms = {}
    for mono, coeff in p.terms.items():
        for m, c in _diff_monomial(mono, var):
            terms[m] = terms.get(m, 0) + coeff * c
    return EllipticPoly._trusted({m: c for m, c in terms.items() if c})


# Constructores

def wp(raw):
    """℘(a); ℘ es par"""
    arg, _ = canonicalize_argument(raw)
    return EllipticPoly._trusted({EllipticMonomial(((arg, 1, 0),)): Fraction(1)})


def wp_prime(raw):
    """℘′(a) con la paridad del argumento"""
    arg, parity = canonicalize_argument(raw)
    return EllipticPoly._trusted({EllipticMonomial(((arg, 0, 1),)): Fraction(parity)})


def wp_second(raw):
    """℘″(a) = 6℘(a)² − g2/2"""
    arg, _ = canonicalize_argument(raw)
    return EllipticPoly({
        EllipticMonomial(((arg, 2, 0),)): 6,
        EllipticMonomial((), 1, 0): Fraction(-1, 2),
    })


def g2():
    return EllipticPoly._trusted({EllipticMonomial((), 1, 0): Fraction(1)})


def g3():
    return EllipticPoly._trusted({EllipticMonomial((), 0, 1): Fraction(1)})


def g_monomial(g2_exp, g3_exp, coeff=1):
    return EllipticPoly({EllipticMonomial((), g2_exp, g3_exp): coeff})


def permute_variables(p, mapping):
    """
    Renombra variables: x_i pasa a x_mapping[i]. Los argumentos se vuelven a
    canonicalizar y los factores ℘′ recogen la paridad.
    """
    result = EllipticPoly()
    for mono, coeff in p.terms.items():
        term = EllipticPoly.constant(coeff) * g_monomial(mono.g2_exp, mono.g3_exp)
        for arg, p_exp, pp_exp in mono.factors:
            moved = [0] * len(arg.coeffs)
            for i, c in enumerate(arg.coeffs):
                moved[mapping[i]] = c
            if p_exp:
                term = term * wp(moved) ** p_exp
            if pp_exp:
                term = term * wp_prime(moved) ** pp_exp
        result = result + term
    return result


# Graduación

@dataclass(frozen=True)
class Inhomogeneous:
    """Marca de polinomio no homogéneo con los monomios que discrepan"""

    weights: tuple
    offenders: tuple

    def __str__(self):
        return f"inhomogeneous (pesos {list(self.weights)})"


def weighted_degree(p):
    """
    Peso común (℘:2, ℘′:3, g2:4, g3:6, e_i:2) o Inhomogeneous.
    El polinomio cero no tiene grado: devuelve None.
    """
    weights = Counter()
    by_weight = {}
    for mono in p.terms:
        if isinstance(mono, EllipticMonomial):
            w = mono.weight
        else:
            # clave (e1, e2, e3, g2, g3) de EPoly
            w = WEIGHT_P * (mono[0] + mono[1] + mono[2]) + WEIGHT_G2 * mono[3] + WEIGHT_G3 * mono[4]
        weights[w] += 1
        by_weight.setdefault(w, []).append(mono)
    if not weights:
        return None
    if len(weights) == 1:
        return next(iter(weights))
    dominant = max(weights, key=lambda w: (weights[w], w))
    offenders = tuple(
        mono for w in sorted(by_weight) if w != dominant for mono in sorted(by_weight[w])
    )
    return Inhomogeneous(tuple(sorted(weights)), offenders)


# Serialización canónica: g2^a g3^b P[1,-1,0]^c Pp[1,-1,0]^d : num/den

def format_monomial(mono):
    parts = []
    if mono.g2_exp:
        parts.append(f"g2^{mono.g2_exp}")
    if mono.g3_exp:
        parts.append(f"g3^{mono.g3_exp}")
    for arg, p_exp, pp_exp in mono.factors:
        coords = ','.join(str(c) for c in arg.coeffs)
        if p_exp:
            parts.append(f"P[{coords}]^{p_exp}")
        if pp_exp:
            parts.append(f"Pp[{coords}]^{pp_exp}")
    return ' '.join(parts) if parts else '1'


def parse_monomial(text):
    from .exceptions import SerializationError

    g2_exp = g3_exp = 0
    factor_map = {}
    text = text.strip()
    if text == '1':
        return ONE
    for token in text.split():
        try:
            base, exp = token.rsplit('^', 1)
            exp = int(exp)
            if base == 'g2':
                g2_exp = exp
            elif base == 'g3':
                g3_exp = exp
            elif base.startswith(('P[', 'Pp[')) and base.endswith(']'):
                kind, coords = base[:-1].split('[', 1)
                arg = Argument(tuple(int(c) for c in coords.split(',')))
                slot = factor_map.setdefault(arg, [0, 0])
                slot[0 if kind == 'P' else 1] = exp
            else:
                raise ValueError(base)
        except ValueError as exc:
            raise SerializationError(f"Factor inválido {token!r}") from exc
    factors = tuple((arg, p, pp) for arg, (p, pp) in sorted(factor_map.items()))
    return EllipticMonomial(factors, g2_exp, g3_exp)


def to_text(p):
    """Una línea por término, en el orden total de monomios"""
    from scalars import format_rational

    return '\n'.join(
        f"{format_monomial(mono)} : {format_rational(coeff)}" for mono, coeff in p.sorted_terms()
    )


def from_text(text):
    from scalars import parse_rational

    from .exceptions import SerializationError

    terms = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        if ' : ' not in line:
            raise SerializationError(f"Línea sin coeficiente: {line!r}")
        mono_text, coeff_text = line.rsplit(' : ', 1)
        terms[parse_monomial(mono_text)] = parse_rational(coeff_text)
    return EllipticPoly(terms)


def pretty(p, names):
    """Texto legible con ℘ y ℘′ para reportes y tablas"""
    if not p.terms:
        return '0'
    chunks = []
    for mono, coeff in p.sorted_terms():
        parts = []
        if mono.g2_exp:
            parts.append('g2' + (f"^{mono.g2_exp}" if mono.g2_exp > 1 else ''))
        if mono.g3_exp:
            parts.append('g3' + (f"^{mono.g3_exp}" if mono.g3_exp > 1 else ''))
        for arg, p_exp, pp_exp in mono.factors:
            label = arg.label(names)
            if p_exp:
                parts.append(f"℘({label})" + (f"^{p_exp}" if p_exp > 1 else ''))
            if pp_exp:
                parts.append(f"℘′({label})")
        body = '·'.join(parts)
        if not body:
            chunks.append(str(coeff))
        elif coeff == 1:
            chunks.append(body)
        elif coeff == -1:
            chunks.append('-' + body)
        else:
            chunks.append(f"{coeff}·{body}")
    return ' + '.join(chunks).replace('+ -', '- ')
