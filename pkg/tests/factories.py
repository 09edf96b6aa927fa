"""
Factories de objetos del motor (no hay modelos): polinomios elípticos,
operadores pequeños y configuraciones de ejecución.
"""

import random
from fractions import Fraction

import factory

from diff_op import DiffOp
from elliptic_ring import EllipticPoly, g_monomial, wp, wp_prime
from elliptic_ring.arguments import canonicalize_argument
from numeric_eval import default_arguments


def random_elliptic_poly(n, terms, max_exp, seed):
    """Suma de monomios aleatorios en ℘, ℘′, g2, g3 sobre las formas x_i, x_i ± x_j"""
    rng = random.Random(f"poly:{seed}")
    arguments = default_arguments(n)
    total = EllipticPoly()
    for _ in range(terms):
        coeff = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 4))
        term = g_monomial(rng.randint(0, 1), rng.randint(0, 1) if max_exp > 1 else 0, coeff)
        for arg in rng.sample(arguments, k=min(2, len(arguments))):
            raw = arg.coeffs if rng.random() < 0.5 else tuple(-c for c in arg.coeffs)
            term = term * wp(raw) ** rng.randint(0, max_exp)
            if rng.random() < 0.5:
                term = term * wp_prime(raw)
        total = total + term
    return total


def raw_elliptic_terms(n, terms, max_pp, seed):
    """Términos sin normalizar, con ℘′ hasta max_pp, para normalize()"""
    rng = random.Random(f"raw:{seed}")
    arguments = default_arguments(n)
    raw = []
    for _ in range(terms):
        arg, _ = canonicalize_argument(rng.choice(arguments).coeffs)
        factors = {arg: (rng.randint(0, 2), rng.randint(0, max_pp))}
        raw.append((factors, rng.randint(0, 1), rng.randint(0, 1), Fraction(rng.randint(1, 7))))
    return raw


def random_diffop(n, order, terms, seed):
    """Operador de orden ≤ order con coeficientes elípticos pequeños"""
    rng = random.Random(f"op:{seed}")
    result = {}
    for k in range(terms):
        alpha = [0] * n
        for _ in range(rng.randint(0, order)):
            alpha[rng.randrange(n)] += 1
        coeff = random_elliptic_poly(n, 1, 1, f"{seed}:{k}")
        alpha = tuple(alpha)
        result[alpha] = result.get(alpha, EllipticPoly()) + coeff
    return DiffOp(n, result)


class EllipticPolyFactory(factory.Factory):
    class Meta:
        model = random_elliptic_poly

    n = 2
    terms = 3
    max_exp = 2
    seed = factory.Sequence(lambda k: k)


class RawTermsFactory(factory.Factory):
    class Meta:
        model = raw_elliptic_terms

    n = 2
    terms = 4
    max_pp = 4
    seed = factory.Sequence(lambda k: k)


class DiffOpFactory(factory.Factory):
    class Meta:
        model = random_diffop

    n = 2
    order = 2
    terms = 2
    seed = factory.Sequence(lambda k: k)


class RunConfigFactory(factory.DictFactory):
    """Configuración ya validada, como la deja RunConfigSerializer"""

    system = 'a2'
    checks = factory.LazyFunction(lambda: ['catalog'])
    target = None
    precision_bits = 128
    trials = 3
    seed = 7
    contexts = factory.LazyFunction(lambda: ['4/1,0/1', '7/3,5/7'])
    cache_dir = None
    report_path = None
    threads = 1
