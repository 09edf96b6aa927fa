"""
Operadores diferenciales con coeficientes elípticos
"""

from .exceptions import CacheIntegrityError, DimensionMismatchError, ZeroOperatorError
from .operator import (
    DiffOp,
    multi_index,
    op_add,
    op_commutator,
    op_compose,
    op_power,
    op_scale,
    op_weighted_degree,
    permute_operator,
)
from .serialization import dump_diffop, load_diffop
from .symbol import SYMBOL_CONVENTION, ConstancyResult, SymbolPoly, principal_symbol, symbol_is_constant

__all__ = (
    'SYMBOL_CONVENTION',
    'CacheIntegrityError',
    'ConstancyResult',
    'DiffOp',
    'DimensionMismatchError',
    'SymbolPoly',
    'ZeroOperatorError',
    'dump_diffop',
    'load_diffop',
    'multi_index',
    'op_add',
    'op_commutator',
    'op_compose',
    'op_power',
    'op_scale',
    'op_weighted_degree',
    'permute_operator',
    'principal_symbol',
    'symbol_is_constant',
)
