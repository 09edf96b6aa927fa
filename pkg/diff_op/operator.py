"""
Operadores diferenciales lineales con coeficientes elípticos

Un DiffOp es un mapa {multi-índice: EllipticPoly}; el término (f, α)
representa f·∂^α con el coeficiente a la izquierda.
"""

import logging
from functools import lru_cache
from itertools import product
from math import comb

from elliptic_ring import EllipticPoly, Inhomogeneous, differentiate, poly_mul

from .exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)


def multi_index(*orders):
    return tuple(int(o) for o in orders)


class DiffOp:
    """Operador inmutable en n variables, sin coeficientes nulos"""

    __slots__ = ('n', 'terms', '_hash')

    def __init__(self, n, terms=None):
        clean = {}
        for alpha, coeff in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != n:
                raise DimensionMismatchError(
                    f"Multi-índice {alpha} no tiene longitud {n}"
                )
            if not isinstance(coeff, EllipticPoly):
                coeff = EllipticPoly.constant(coeff)
            if coeff:
                clean[alpha] = coeff
        self.n = n
        self.terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, n, terms):
        op = cls.__new__(cls)
        op.n = n
        op.terms = terms
        op._hash = None
        return op

    @classmethod
    def zero(cls, n):
        return cls._trusted(n, {})

    @classmethod
    def identity(cls, n):
        return cls.multiplication(n, EllipticPoly.constant(1))

    @classmethod
    def multiplication(cls, n, coeff):
        return cls(n, {(0,) * n: coeff})

    @classmethod
    def partial(cls, n, var, power=1):
        alpha = [0] * n
        alpha[var] = power
        return cls(n, {tuple(alpha): 1})

    @classmethod
    def linear_form(cls, coeffs):
        """Σ c_i ∂_i"""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                alpha = [0] * n
                alpha[i] = 1
                terms[tuple(alpha)] = c
        return cls(n, terms)

    # Consultas

    @property
    def order(self):
        if not self.terms:
            return -1
        return max(sum(alpha) for alpha in self.terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, alpha):
        return self.terms.get(tuple(alpha), EllipticPoly())

    def part(self, order):
        """Términos de orden total exacto"""
        return DiffOp._trusted(
            self.n, {a: c for a, c in self.terms.items() if sum(a) == order}
        )

    def without_order(self, order):
        return DiffOp._trusted(
            self.n, {a: c for a, c in self.terms.items() if sum(a) != order}
        )

    def sorted_terms(self):
        return sorted(self.terms.items())

    def size(self):
        return sum(len(c) for c in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    # Aritmética

    def __add__(self, other):
        return op_add(self, other)

    def __sub__(self, other):
        return op_add(self, -other)

    def __neg__(self):
        return DiffOp._trusted(self.n, {a: -c for a, c in self.terms.items()})

    def __rmul__(self, scalar):
        return op_scale(scalar, self)

    def __matmul__(self, other):
        return op_compose(self, other)

    def __pow__(self, k):
        return op_power(self, k)

    def __repr__(self):
        return f"DiffOp(n={self.n}, order={self.order}, terms={len(self.terms)})"


def _check_dims(a, b):
    if a.n != b.n:
        raise DimensionMismatchError(f"Operadores en {a.n} y {b.n} variables")


def op_add(a, b):
    """Suma término a término"""
    _check_dims(a, b)
    terms = dict(a.terms)
    for alpha, coeff in b.terms.items():
        if alpha in terms:
            total = terms[alpha] + coeff
            if total:
                terms[alpha] = total
            else:
                del terms[alpha]
        else:
            terms[alpha] = coeff
    return DiffOp._trusted(a.n, terms)


def op_scale(c, a):
    """Multiplica por la izquierda por un escalar o EllipticPoly"""
    if not isinstance(c, EllipticPoly):
        c = EllipticPoly.constant(c)
    terms = {}
    for alpha, coeff in a.terms.items():
        value = poly_mul(c, coeff)
        if value:
            terms[alpha] = value
    return DiffOp._trusted(a.n, terms)


def _box(alpha):
    return product(*(range(k + 1) for k in alpha))


def _derivative_table(poly, deltas):
    """∂^δ(poly) para todos los δ pedidos, reutilizando derivadas previas"""
    table = {tuple([0] * len(next(iter(deltas)))): poly} if deltas else {}
    for delta in sorted(deltas, key=sum):
        if delta in table:
            continue
        i = next(k for k, d in enumerate(delta) if d)
        prev = list(delta)
        prev[i] -= 1
        prev = tuple(prev)
        if prev not in table:
            table[prev] = _derivative_table(poly, {prev})[prev]
        table[delta] = differentiate(table[prev], i)
    return table


def _compose_block(left_terms, right_tables):
    acc = {}
    for alpha, f in left_terms:
        for gamma in _box(alpha):
            binom = 1
            for a_i, g_i in zip(alpha, gamma):
                binom *= comb(a_i, g_i)
            delta = tuple(a - g for a, g in zip(alpha, gamma))
            for beta, table in right_tables:
                dg = table[delta]
                if not dg:
                    continue
                target = tuple(g + b for g, b in zip(gamma, beta))
                slot = acc.setdefault(target, {})
                for mono, coeff in poly_mul(f, dg).terms.items():
                    slot[mono] = slot.get(mono, 0) + binom * coeff
    return acc


def op_compose(a, b, executor=None, blocks=1, progress=None):
    """
    Composición por la regla de Leibniz generalizada:
    (f∂^α)∘(g∂^β) = Σ_{γ≤α} C(α,γ)·f·∂^{α−γ}(g)·∂^{γ+β}.
    Con executor se reparte por bloques de términos izquierdos; la mezcla
    sigue el orden de los bloques.
    """
    _check_dims(a, b)
    deltas = set()
    for alpha in a.terms:
        deltas.update(_box(alpha))
    right_tables = [
        (beta, _derivative_table(g, deltas)) for beta, g in sorted(b.terms.items())
    ]
    left = sorted(a.terms.items())
    if executor is None or blocks <= 1 or len(left) < 2:
        chunks = [left]
    else:
        size = -(-len(left) // blocks)
        chunks = [left[i:i + size] for i in range(0, len(left), size)]

    if executor is None:
        partials = (_compose_block(chunk, right_tables) for chunk in chunks)
    else:
        partials = executor.map(_compose_block, chunks, [right_tables] * len(chunks))

    merged = {}
    for done, acc in enumerate(partials, start=1):
        for target, monos in acc.items():
            slot = merged.setdefault(target, {})
            for mono, coeff in monos.items():
                slot[mono] = slot.get(mono, 0) + coeff
        if progress is not None:
            progress(done, len(chunks))

    terms = {}
    for target, monos in merged.items():
        poly = EllipticPoly({m: c for m, c in monos.items() if c})
        if poly:
            terms[target] = poly
    return DiffOp._trusted(a.n, terms)


def op_commutator(a, b, **kwargs):
    """[a, b] = a∘b − b∘a"""
    return op_add(op_compose(a, b, **kwargs), -op_compose(b, a, **kwargs))


@lru_cache(maxsize=128)
def _cached_power(a, k):
    if k == 1:
        return a
    logger.debug("Calculando potencia %s de un operador de orden %s", k, a.order)
    return op_compose(_cached_power(a, k - 1), a)


def op_power(a, k):
    """a∘a∘…∘a plegado a la izquierda, con potencias intermedias en caché"""
    if k < 1:
        raise ValueError(f"La potencia debe ser positiva, se pidió {k}")
    return _cached_power(a, k)


def op_weighted_degree(a):
    """Peso común de los términos (∂:1 más la graduación elíptica) o Inhomogeneous"""
    weights = {}
    for alpha, coeff in a.terms.items():
        for mono in coeff.terms:
            w = sum(alpha) + mono.weight
            weights.setdefault(w, []).append((alpha, mono))
    if not weights:
        return None
    if len(weights) == 1:
        return next(iter(weights))
    dominant = max(weights, key=lambda w: (len(weights[w]), w))
    offenders = tuple(
        item for w in sorted(weights) if w != dominant for item in sorted(weights[w])
    )
    return Inhomogeneous(tuple(sorted(weights)), offenders)


def permute_operator(a, mapping):
    """Renombra variables x_i -> x_mapping[i] en derivadas y argumentos"""
    from elliptic_ring import permute_variables

    terms = {}
    for alpha, coeff in a.terms.items():
        moved = [0] * a.n
        for i, k in enumerate(alpha):
            moved[mapping[i]] = k
        terms[tuple(moved)] = permute_variables(coeff, mapping)
    return DiffOp(a.n, terms)
