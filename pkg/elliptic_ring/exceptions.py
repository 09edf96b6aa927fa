"""
Excepciones del anillo elíptico
"""


class PoleArgumentError(ValueError):
    """Argumento nulo: ℘(0) es un polo"""


class UncoveredArgumentError(KeyError):
    """Un argumento del polinomio no tiene semiperiodo asignado"""

    def __init__(self, argument):
        super().__init__(f"Argumento sin semiperiodo asignado: {list(argument)}")
        self.argument = argument


class NonSymmetricError(ValueError):
    """El polinomio en e1, e2, e3 no es simétrico; conserva el residuo asimétrico"""

    def __init__(self, remainder):
        super().__init__(f"Polinomio no simétrico en e1, e2, e3; residuo: {remainder}")
        self.remainder = remainder


class SerializationError(ValueError):
    """Texto de polinomio elíptico mal formado"""
