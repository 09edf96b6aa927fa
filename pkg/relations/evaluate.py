"""
Evaluación de polinomios abstractos con operadores asignados a los generadores
"""

import logging

from diff_op import DiffOp, op_add, op_compose, op_scale
from elliptic_ring import EllipticPoly, g_monomial

from .exceptions import UnboundGeneratorError

logger = logging.getLogger(__name__)

SCALAR_GENERATORS = ('g2', 'g3')


class OperatorMemo:
    """
    Memo en memoria de productos de operadores por clave de texto.
    Las subclases pueden persistir (ver cli.cache.DiskCache).
    """

    def __init__(self):
        self._store = {}

    def get(self, key):
        return self._store.get(key)

    def put(self, key, op):
        self._store[key] = op

    def get_or_compute(self, key, factory):
        if key is None:
            return factory()
        found = self.get(key)
        if found is None:
            found = factory()
            self.put(key, found)
        return found

    def __contains__(self, key):
        return key in self._store

    def __len__(self):
        return len(self._store)


def product_key(factors, labels):
    """'a2_L1^2*a2_I12' para factores [(generador, exponente)], o None sin etiquetas"""
    if labels is None:
        return None
    try:
        return '*'.join(f"{labels[g]}^{e}" if e > 1 else labels[g] for g, e in factors)
    except KeyError:
        return None


class ProductBuilder:
    """
    Productos g1^e1 ∘ g2^e2 ∘ … en el orden de los generadores; cada producto
    se obtiene del anterior quitando un factor del último generador.
    """

    def __init__(self, binding, n, labels=None, memo=None, executor=None, blocks=1):
        self.binding = binding
        self.n = n
        self.labels = labels
        self.memo = memo if memo is not None else OperatorMemo()
        self.executor = executor
        self.blocks = blocks

    def __call__(self, factors):
        factors = tuple((g, e) for g, e in factors if e)
        if not factors:
            return DiffOp.identity(self.n)
        return self.memo.get_or_compute(
            product_key(factors, self.labels), lambda: self._build(factors),
        )

    def _build(self, factors):
        head = list(factors)
        name, exp = head[-1]
        if exp > 1:
            head[-1] = (name, exp - 1)
        else:
            head.pop()
        op = self.binding[name]
        if not head:
            return op
        logger.debug("Componiendo %s", product_key(factors, self.labels) or factors)
        return op_compose(self(head), op, executor=self.executor, blocks=self.blocks)


def evaluate_abstract(p, binding, labels=None, memo=None, executor=None, blocks=1):
    """
    Sustituye cada generador por su operador. Los factores de cada término se
    componen en el orden de los generadores; g2 y g3 pasan a coeficientes
    escalares. Términos con el mismo producto de operadores se agrupan.
    """
    operator_generators = [g for g in p.generators if g not in SCALAR_GENERATORS]
    used = {g for exps in p.terms for g, e in zip(p.generators, exps) if e}
    for g in operator_generators:
        if g in used and g not in binding:
            raise UnboundGeneratorError(g)
    if not binding:
        raise UnboundGeneratorError(operator_generators[0] if operator_generators else '?')
    n = next(iter(binding.values())).n

    grouped = {}
    for exps, coeff in p.sorted_terms():
        factors = tuple(
            (g, e) for g, e in zip(p.generators, exps) if g not in SCALAR_GENERATORS
        )
        powers = dict(zip(p.generators, exps))
        scalar = g_monomial(powers.get('g2', 0), powers.get('g3', 0), coeff)
        grouped[factors] = grouped.get(factors, EllipticPoly()) + scalar

    builder = ProductBuilder(binding, n, labels, memo, executor, blocks)
    total = DiffOp.zero(n)
    for factors, scalar in sorted(grouped.items()):
        if scalar:
            total = op_add(total, op_scale(scalar, builder(factors)))
    return total
