"""
Escalares exactos (racionales) y complejos de precisión arbitraria
"""

from .bigcomplex import BigComplex, bigcomplex_arith, mp_context, rat_to_bigcomplex
from .exceptions import ScalarDivisionError
from .rational import ExactRational, format_rational, parse_rational, rat_arith

__all__ = (
    'BigComplex',
    'ExactRational',
    'ScalarDivisionError',
    'bigcomplex_arith',
    'format_rational',
    'mp_context',
    'parse_rational',
    'rat_arith',
    'rat_to_bigcomplex',
)
