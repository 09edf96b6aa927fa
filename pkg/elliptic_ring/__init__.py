"""
Anillo de coeficientes: polinomios en ℘(a), ℘′(a), g2, g3 en forma normal
"""

from .arguments import Argument, canonicalize_argument
from .epoly import EPoly, HalfPeriod, reduce_symmetric, specialize_half_periods, vieta_normal_form
from .exceptions import NonSymmetricError, PoleArgumentError, SerializationError, UncoveredArgumentError
from .poly import (
    ONE,
    EllipticMonomial,
    EllipticPoly,
    Inhomogeneous,
    differentiate,
    from_text,
    g2,
    g3,
    g_monomial,
    normalize,
    parse_monomial,
    permute_variables,
    poly_add,
    poly_mul,
    pretty,
    to_text,
    weighted_degree,
    wp,
    wp_prime,
    wp_second,
)

__all__ = (
    'ONE',
    'Argument',
    'EPoly',
    'EllipticMonomial',
    'EllipticPoly',
    'HalfPeriod',
    'Inhomogeneous',
    'NonSymmetricError',
    'PoleArgumentError',
    'SerializationError',
    'UncoveredArgumentError',
    'canonicalize_argument',
    'differentiate',
    'from_text',
    'g2',
    'g3',
    'g_monomial',
    'normalize',
    'parse_monomial',
    'permute_variables',
    'poly_add',
    'poly_mul',
    'pretty',
    'reduce_symmetric',
    'specialize_half_periods',
    'to_text',
    'vieta_normal_form',
    'weighted_degree',
    'wp',
    'wp_prime',
    'wp_second',
)
