"""
Excepciones del álgebra de operadores
"""


class DimensionMismatchError(ValueError):
    """Operadores con distinto número de variables"""


class ZeroOperatorError(ValueError):
    """El operador cero no tiene símbolo principal"""


class CacheIntegrityError(ValueError):
    """La serialización no coincide con su hash de integridad o su versión"""
