"""
Complejos de precisión arbitraria sobre mpmath

Cada precisión tiene su propio contexto mpmath (nunca se toca mpmath.mp),
así que hilos con distintas precisiones no se pisan.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import libmp

from .exceptions import ScalarDivisionError

MIN_PRECISION_BITS = 64


@lru_cache(maxsize=None)
def mp_context(precision_bits):
    """Contexto mpmath dedicado a una precisión"""
    if precision_bits < MIN_PRECISION_BITS:
        raise ValueError(f"La precisión mínima es {MIN_PRECISION_BITS} bits, se pidió {precision_bits}")
    ctx = mpmath.MPContext()
    ctx.prec = precision_bits
    return ctx


def exact_mpf(ctx, value):
    """Racional a mpf con redondeo correcto al más cercano"""
    value = Fraction(value)
    raw = libmp.from_rational(value.numerator, value.denominator, ctx.prec, libmp.round_nearest)
    return ctx.make_mpf(raw)


@dataclass(frozen=True)
class BigComplex:
    """Complejo en forma rectangular con precisión explícita"""

    value: object
    precision_bits: int

    @property
    def real(self):
        return self.value.real

    @property
    def imag(self):
        return self.value.imag

    @classmethod
    def from_parts(cls, real, imag, precision_bits):
        ctx = mp_context(precision_bits)
        return cls(ctx.mpc(real, imag), precision_bits)

    def _check(self, other):
        if self.precision_bits != other.precision_bits:
            raise ValueError(
                f"Precisiones distintas: {self.precision_bits} vs {other.precision_bits} bits"
            )

    def __add__(self, other):
        self._check(other)
        return BigComplex(self.value + other.value, self.precision_bits)

    def __sub__(self, other):
        self._check(other)
        return BigComplex(self.value - other.value, self.precision_bits)

    def __mul__(self, other):
        self._check(other)
        return BigComplex(self.value * other.value, self.precision_bits)

    def __truediv__(self, other):
        self._check(other)
        if not other.value:
            raise ScalarDivisionError("División entre un complejo numéricamente nulo")
        return BigComplex(self.value / other.value, self.precision_bits)

    def __abs__(self):
        ctx = mp_context(self.precision_bits)
        return BigComplex(ctx.mpc(abs(self.value)), self.precision_bits)

    def magnitude(self):
        """Módulo como float, para informes y umbrales"""
        return float(abs(self.value))

    def __str__(self):
        ctx = mp_context(self.precision_bits)
        return ctx.nstr(self.value, 20)


def rat_to_bigcomplex(value, precision_bits):
    """Conversión correctamente redondeada de un racional exacto"""
    ctx = mp_context(precision_bits)
    return BigComplex(ctx.mpc(exact_mpf(ctx, value)), precision_bits)


def bigcomplex_arith(a, b=None, op='add'):
    """Aritmética add/sub/mul/div/abs a la precisión común"""
    if op == 'abs':
        return abs(a)
    if b is None:
        raise ValueError(f"La operación {op!r} necesita dos operandos")
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    raise ValueError(f"Operación compleja desconocida: {op!r}")
