"""
Excepciones de la verificación y derivación de relaciones
"""


class UnboundGeneratorError(KeyError):
    """Generador de la relación sin operador asignado"""

    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"El generador {self.name!r} no tiene operador asignado"


class NotExpressibleError(ValueError):
    """El operador no es un polinomio en la base de integrales dada"""

    def __init__(self, message, order=None, witness=None):
        super().__init__(message)
        self.order = order
        self.witness = witness


class DescentStalledError(RuntimeError):
    """El orden del resto no bajó tras un paso de descenso"""

    def __init__(self, message, order=None):
        super().__init__(message)
        self.order = order


class OddPowerError(ValueError):
    """Potencia impar de L3 donde la sustitución exige potencias pares"""
