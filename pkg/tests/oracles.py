"""
Composición ingenua de operadores: ∂_i se pasa a través del coeficiente de
uno en uno (∂_i∘g = g∂_i + ∂_i(g)), sin la fórmula de Leibniz multinomial.
"""

from diff_op import DiffOp
from elliptic_ring import EllipticPoly, differentiate


def _push_partial(var, op):
    """∂_var ∘ op"""
    terms = {}
    for beta, g in op.terms.items():
        raised = list(beta)
        raised[var] += 1
        raised = tuple(raised)
        terms[raised] = terms.get(raised, EllipticPoly()) + g
        dg = differentiate(g, var)
        terms[beta] = terms.get(beta, EllipticPoly()) + dg
    return DiffOp(op.n, terms)


def naive_compose(a, b):
    total = {}
    for alpha, f in a.terms.items():
        current = b
        for var, k in enumerate(alpha):
            for _ in range(k):
                current = _push_partial(var, current)
        for beta, g in current.terms.items():
            total[beta] = total.get(beta, EllipticPoly()) + f * g
    return DiffOp(a.n, total)
