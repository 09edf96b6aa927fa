"""
Polinomios conmutativos en generadores con nombre (L1, L2, L3, I, J, g2, g3, …)
"""

from dataclasses import dataclass
from fractions import Fraction

from scalars import format_rational, parse_rational

DEFAULT_WEIGHTS = {'g2': 4, 'g3': 6}


class AbstractIntegralPoly:
    """
    terms: {vector de exponentes: Fraction}, alineado con generators.
    Sin coeficientes nulos; el orden de términos es el de los vectores.
    """

    __slots__ = ('generators', 'terms')

    def __init__(self, generators, terms=None):
        generators = tuple(generators)
        if len(set(generators)) != len(generators):
            raise ValueError(f"Generadores repetidos: {generators}")
        self.generators = generators
        self.terms = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(generators):
                raise ValueError(f"Vector {exps} no coincide con {generators}")
            if coeff:
                self.terms[exps] = self.terms.get(exps, 0) + Fraction(coeff)
        self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def generator(cls, name, generators):
        exps = [0] * len(generators)
        exps[list(generators).index(name)] = 1
        return cls(generators, {tuple(exps): 1})

    @classmethod
    def constant(cls, value, generators):
        return cls(generators, {(0,) * len(generators): value})

    @classmethod
    def gens(cls, generators):
        """Un polinomio por generador, en el mismo orden"""
        return tuple(cls.generator(name, generators) for name in generators)

    # Alineación de generadores

    def with_generators(self, generators):
        generators = tuple(generators)
        missing = [g for g, col in zip(self.generators, zip(*self.terms) if self.terms else [])
                   if g not in generators and any(col)]
        if missing:
            raise ValueError(f"Los generadores {missing} no caben en {generators}")
        index = {g: i for i, g in enumerate(self.generators)}
        terms = {}
        for exps, coeff in self.terms.items():
            new = tuple(exps[index[g]] if g in index else 0 for g in generators)
            terms[new] = terms.get(new, 0) + coeff
        return AbstractIntegralPoly(generators, terms)

    def _align(self, other):
        if not isinstance(other, AbstractIntegralPoly):
            other = AbstractIntegralPoly.constant(other, self.generators)
        if other.generators == self.generators:
            return self, other
        union = self.generators + tuple(g for g in other.generators if g not in self.generators)
        return self.with_generators(union), other.with_generators(union)

    # Aritmética

    def __add__(self, other):
        a, b = self._align(other)
        terms = dict(a.terms)
        for exps, coeff in b.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return AbstractIntegralPoly(a.generators, terms)

    __radd__ = __add__

    def __neg__(self):
        return AbstractIntegralPoly(self.generators, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, AbstractIntegralPoly) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, AbstractIntegralPoly):
            other = Fraction(other)
            return AbstractIntegralPoly(self.generators, {k: v * other for k, v in self.terms.items()})
        a, b = self._align(other)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return AbstractIntegralPoly(a.generators, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = AbstractIntegralPoly.constant(1, self.generators)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, AbstractIntegralPoly):
            return NotImplemented
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.generators, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # Consultas

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def coefficient(self, **exponents):
        exps = tuple(exponents.get(g, 0) for g in self.generators)
        return self.terms.get(exps, Fraction(0))

    def degree_in(self, name):
        i = self.generators.index(name)
        return max((exps[i] for exps in self.terms), default=0)

    def weight_of(self, exps, weights):
        table = {**DEFAULT_WEIGHTS, **weights}
        return sum(table[g] * e for g, e in zip(self.generators, exps))

    def weighted_degree(self, weights):
        """Peso común o WeightReport con los términos que discrepan"""
        by_weight = {}
        for exps in self.terms:
            by_weight.setdefault(self.weight_of(exps, weights), []).append(exps)
        if not by_weight:
            return None
        if len(by_weight) == 1:
            return next(iter(by_weight))
        dominant = max(by_weight, key=lambda w: (len(by_weight[w]), w))
        offenders = tuple(
            (exps, self.terms[exps], w)
            for w in sorted(by_weight) if w != dominant for exps in sorted(by_weight[w])
        )
        return WeightReport(dominant, offenders)

    def substitute(self, name, value):
        """Sustituye un generador por un polinomio (que puede traer generadores nuevos)"""
        i = self.generators.index(name)
        rest = self.generators[:i] + self.generators[i + 1:]
        result = AbstractIntegralPoly(rest)
        powers = {}
        for exps, coeff in self.terms.items():
            k = exps[i]
            if k not in powers:
                powers[k] = value ** k
            base = AbstractIntegralPoly(rest, {exps[:i] + exps[i + 1:]: coeff})
            result = result + base * powers[k]
        return result

    def drop_generator(self, name):
        """Anula un generador: se quitan los términos que lo contienen"""
        i = self.generators.index(name)
        rest = self.generators[:i] + self.generators[i + 1:]
        return AbstractIntegralPoly(
            rest, {e[:i] + e[i + 1:]: c for e, c in self.terms.items() if not e[i]}
        )

    def monomial_text(self, exps):
        parts = [f"{g}^{e}" if e > 1 else g for g, e in zip(self.generators, exps) if e]
        return '*'.join(parts) if parts else '1'

    def __str__(self):
        if not self.terms:
            return '0'
        chunks = []
        for exps, coeff in self.sorted_terms():
            mono = self.monomial_text(exps)
            if mono == '1':
                chunks.append(str(coeff))
            elif coeff == 1:
                chunks.append(mono)
            elif coeff == -1:
                chunks.append(f"-{mono}")
            else:
                chunks.append(f"{coeff}*{mono}")
        return ' + '.join(chunks).replace('+ -', '- ')

    def __repr__(self):
        return f"AbstractIntegralPoly({self})"

    # Serialización canónica

    def to_text(self):
        lines = [f"generators {' '.join(self.generators)}"]
        for exps, coeff in sorted(self.terms.items()):
            lines.append(f"{' '.join(str(e) for e in exps)} : {format_rational(coeff)}")
        return '\n'.join(lines) + '\n'

    @classmethod
    def from_text(cls, text):
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines or not lines[0].startswith('generators'):
            raise ValueError("Falta la cabecera 'generators'")
        generators = tuple(lines[0].split()[1:])
        terms = {}
        for line in lines[1:]:
            exps_text, coeff_text = line.split(' : ')
            terms[tuple(int(e) for e in exps_text.split())] = parse_rational(coeff_text)
        return cls(generators, terms)


class RelationPolynomial(AbstractIntegralPoly):
    """Relación Q(…) = 0 con los símbolos de integral distinguidos (I, J)"""

    __slots__ = ('integrals',)

    def __init__(self, generators, terms=None, integrals=('I',)):
        super().__init__(generators, terms)
        self.integrals = tuple(integrals)

    @classmethod
    def from_poly(cls, poly, integrals):
        return cls(poly.generators, poly.terms, integrals)


@dataclass(frozen=True)
class WeightReport:
    """Resultado no homogéneo: peso dominante y términos fuera de él"""

    dominant: int
    offenders: tuple

    def __str__(self):
        return f"inhomogeneous (dominante {self.dominant}, {len(self.offenders)} términos fuera)"
