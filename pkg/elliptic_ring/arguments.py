"""
Argumentos lineales enteros de ℘ y ℘′
"""

from typing import NamedTuple

from .exceptions import PoleArgumentError


class Argument(NamedTuple):
    """Forma lineal entera en las variables de configuración, con signo canónico"""

    coeffs: tuple

    @property
    def n(self):
        return len(self.coeffs)

    def label(self, names):
        """Texto legible, por ejemplo x1-x2 o x+y"""
        parts = []
        for coeff, name in zip(self.coeffs, names):
            if not coeff:
                continue
            sign = '-' if coeff < 0 else '+'
            magnitude = '' if abs(coeff) == 1 else str(abs(coeff))
            parts.append(f"{sign}{magnitude}{name}")
        text = ''.join(parts)
        return text[1:] if text.startswith('+') else text


def canonicalize_argument(raw):
    """
    Devuelve (Argument, paridad). La primera entrada no nula queda positiva;
    paridad -1 indica que se negó el vector y los coeficientes de ℘′ cambian de signo.
    """
    coeffs = tuple(int(c) for c in raw)
    for c in coeffs:
        if c > 0:
            return Argument(coeffs), 1
        if c < 0:
            return Argument(tuple(-x for x in coeffs)), -1
    raise PoleArgumentError(f"Argumento nulo {list(coeffs)}: ℘ tiene un polo en la red")
