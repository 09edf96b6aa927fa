"""
Excepciones de la evaluación numérica
"""


class SeriesNotConvergedError(ArithmeticError):
    """La serie de Laurent no converge en el punto pedido"""


class DegenerateCurveError(ValueError):
    """Discriminante g2³ − 27g3² nulo o casi nulo"""


class SamplingError(RuntimeError):
    """No se encontraron puntos de muestreo válidos tras los reintentos"""
