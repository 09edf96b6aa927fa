"""
℘ y ℘′ de Weierstrass a partir de (g2, g3) por la serie de Laurent

℘(z) = z⁻² + Σ_{k≥2} c_k z^(2k−2), c2 = g2/20, c3 = g3/28 y para k ≥ 4
c_k = 3·Σ_{m=2}^{k−2} c_m c_{k−m} / ((2k+1)(k−3)).
Los periodos nunca se calculan.
"""

import threading
from fractions import Fraction

from scalars import BigComplex, mp_context, parse_rational
from scalars.bigcomplex import exact_mpf

from .exceptions import DegenerateCurveError, SeriesNotConvergedError

DEFAULT_SAMPLE_SCALE = Fraction(3, 20)
DEFAULT_MAX_TERMS = 600
# Términos consecutivos bajo el umbral antes de cortar (c_k se anula en
# progresiones cuando g2 = 0 o g3 = 0).
_QUIET_TERMS = 3


class EllipticContext:
    """Curva (g2, g3) con precisión de trabajo; inmutable salvo la tabla de c_k"""

    def __init__(self, g2, g3, precision_bits=256, sample_scale=DEFAULT_SAMPLE_SCALE,
                 max_terms=DEFAULT_MAX_TERMS):
        self.g2 = parse_rational(g2)
        self.g3 = parse_rational(g3)
        if self.g2 ** 3 - 27 * self.g3 ** 2 == 0:
            raise DegenerateCurveError(
                f"Curva degenerada: g2³ − 27g3² = 0 para (g2, g3) = ({self.g2}, {self.g3})"
            )
        self.precision_bits = precision_bits
        self.sample_scale = Fraction(sample_scale)
        self.max_terms = max_terms
        self.mp = mp_context(precision_bits)
        self.g2_value = exact_mpf(self.mp, self.g2)
        self.g3_value = exact_mpf(self.mp, self.g3)
        self._coeffs = [None, None, self.g2_value / 20, self.g3_value / 28]
        self._lock = threading.Lock()

    @property
    def label(self):
        return f"{self.g2},{self.g3}"

    def __repr__(self):
        return f"EllipticContext(g2={self.g2}, g3={self.g3}, bits={self.precision_bits})"

    def laurent_coefficient(self, k):
        """c_k de la serie, calculado y guardado bajo candado"""
        if k < len(self._coeffs):
            return self._coeffs[k]
        with self._lock:
            while len(self._coeffs) <= k:
                j = len(self._coeffs)
                total = self.mp.mpf(0)
                for m in range(2, j - 1):
                    total += self._coeffs[m] * self._coeffs[j - m]
                self._coeffs.append(3 * total / ((2 * j + 1) * (j - 3)))
        return self._coeffs[k]


def wp_pair(ctx, z):
    """(℘(z), ℘′(z)) como mpc del contexto; z es un mpc o un BigComplex"""
    if isinstance(z, BigComplex):
        z = z.value
    mp = ctx.mp
    if not z:
        raise SeriesNotConvergedError("℘ tiene un polo en z = 0")
    if abs(z) > ctx.sample_scale.numerator / mp.mpf(ctx.sample_scale.denominator):
        raise SeriesNotConvergedError(f"|z| = {mp.nstr(abs(z), 5)} excede la escala de muestreo")
    z2 = z * z
    value = 1 / z2
    deriv = -2 / (z2 * z)
    power = mp.mpc(1)  # z^(2k−4)
    threshold = mp.ldexp(mp.mpf(1), -ctx.precision_bits)
    quiet = 0
    previous = None
    for k in range(2, ctx.max_terms):
        ck = ctx.laurent_coefficient(k)
        if k > 2:
            power *= z2
        term = ck * power * z2
        value += term
        deriv += ck * (2 * k - 2) * power * z
        size = abs(term)
        if k >= 4 and size <= threshold * abs(value):
            quiet += 1
            if quiet >= _QUIET_TERMS:
                return value, deriv
        else:
            quiet = 0
        if previous is not None and ck and size > previous > 0 and k > 12:
            raise SeriesNotConvergedError(
                f"Términos crecientes en k = {k}: |z| = {mp.nstr(abs(z), 5)} fuera del radio"
            )
        if ck:
            previous = size
    raise SeriesNotConvergedError(f"Sin convergencia tras {ctx.max_terms} términos")


def wp(ctx, z):
    value, _ = wp_pair(ctx, z)
    return BigComplex(value, ctx.precision_bits)


def wp_prime(ctx, z):
    _, deriv = wp_pair(ctx, z)
    return BigComplex(deriv, ctx.precision_bits)


def ode_residual_ratio(ctx, value, deriv):
    """|℘′² − 4℘³ + g2℘ + g3| / |4℘³|"""
    cube = 4 * value ** 3
    residual = deriv * deriv - cube + ctx.g2_value * value + ctx.g3_value
    return abs(residual) / abs(cube)
