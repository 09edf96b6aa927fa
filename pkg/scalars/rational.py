"""
Aritmética racional exacta

ExactRational es fractions.Fraction: la forma canónica (mcd 1, denominador
positivo, cero como 0/1) se impone al construir.
"""

import operator
import re
from fractions import Fraction

from .exceptions import ScalarDivisionError

ExactRational = Fraction

_OPERATIONS = {
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
    'div': operator.truediv,
}

_RATIONAL_RE = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


def rat_arith(a, b, op):
    """Aplica add/sub/mul/div a dos racionales exactos"""
    try:
        func = _OPERATIONS[op]
    except KeyError:
        raise ValueError(f"Operación racional desconocida: {op!r}") from None
    if op == 'div' and b == 0:
        raise ScalarDivisionError(f"División entre cero: {format_rational(a)} / 0")
    return func(Fraction(a), Fraction(b))


def parse_rational(text):
    """
    Lee un racional escrito como "p/q" o "p".
    No se aceptan flotantes: la capa exacta nunca recibe constantes redondeadas.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise ValueError(f"Racional inválido (se espera 'p/q'): {text!r}")
    numerator, denominator = match.groups()
    denominator = int(denominator) if denominator else 1
    if denominator == 0:
        raise ScalarDivisionError(f"Denominador cero en {text!r}")
    return Fraction(int(numerator), denominator)


def format_rational(value):
    """Serialización canónica "±num/den" (el signo + se omite)"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"
