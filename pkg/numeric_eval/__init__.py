"""
Evaluación numérica de alta precisión de ℘/℘′ y oráculo de anulación
"""

from .evaluate import PointValues, eval_elliptic_poly
from .exceptions import DegenerateCurveError, SamplingError, SeriesNotConvergedError
from .oracle import (
    STATUS_FAIL,
    STATUS_INCONCLUSIVE,
    STATUS_PASS,
    OracleDetail,
    OracleResult,
    threshold_for,
    vanishing_oracle,
)
from .roots import solve_e_roots
from .sampling import SamplePoint, default_arguments, sample_points
from .weierstrass import EllipticContext, ode_residual_ratio, wp, wp_pair, wp_prime

DEFAULT_CONTEXTS = (('4', '0'), ('0', '4'), ('7/3', '5/7'))


def default_contexts(precision_bits=256):
    """Lemniscático, equianarmónico y genérico"""
    return [EllipticContext(g2, g3, precision_bits) for g2, g3 in DEFAULT_CONTEXTS]


__all__ = (
    'DEFAULT_CONTEXTS',
    'STATUS_FAIL',
    'STATUS_INCONCLUSIVE',
    'STATUS_PASS',
    'DegenerateCurveError',
    'EllipticContext',
    'OracleDetail',
    'OracleResult',
    'PointValues',
    'SamplePoint',
    'SamplingError',
    'SeriesNotConvergedError',
    'default_arguments',
    'default_contexts',
    'eval_elliptic_poly',
    'ode_residual_ratio',
    'sample_points',
    'solve_e_roots',
    'threshold_for',
    'vanishing_oracle',
    'wp',
    'wp_pair',
    'wp_prime',
)
