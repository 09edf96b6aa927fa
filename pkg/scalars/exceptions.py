"""
Excepciones del paquete scalars
"""


class ScalarDivisionError(ZeroDivisionError):
    """División entre cero, exacta o numérica"""
