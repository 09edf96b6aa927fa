"""
Evaluación numérica de polinomios elípticos en un punto
"""

from scalars import BigComplex
from scalars.bigcomplex import exact_mpf

from .exceptions import SeriesNotConvergedError
from .weierstrass import ode_residual_ratio, wp_pair


class PointValues:
    """
    Valores de ℘ y ℘′ de cada argumento en un punto, con potencias en caché.
    Cada argumento se contrasta con la ecuación diferencial al evaluarse.
    """

    def __init__(self, ctx, point):
        self.ctx = ctx
        self.point = point
        self._wp = {}
        self._powers = {}
        self._coeffs = {}
        self._g = {}
        self._ode_bound = ctx.mp.ldexp(1, -(ctx.precision_bits // 2))

    def values(self, arg):
        if arg not in self._wp:
            z = self.point.to_mpc(self.ctx.mp, arg.coeffs)
            value, deriv = wp_pair(self.ctx, z)
            if ode_residual_ratio(self.ctx, value, deriv) > self._ode_bound:
                raise SeriesNotConvergedError(f"Residuo de la EDO alto en el argumento {list(arg.coeffs)}")
            self._wp[arg] = (value, deriv)
        return self._wp[arg]

    def wp_power(self, arg, k):
        key = (arg, k)
        if key not in self._powers:
            self._powers[key] = self.values(arg)[0] ** k
        return self._powers[key]

    def coefficient(self, value):
        if value not in self._coeffs:
            self._coeffs[value] = exact_mpf(self.ctx.mp, value)
        return self._coeffs[value]

    def g_part(self, a, b):
        key = (a, b)
        if key not in self._g:
            self._g[key] = self.ctx.g2_value ** a * self.ctx.g3_value ** b
        return self._g[key]

    def evaluate(self, poly):
        """(valor, masa de cancelación) como mpc y mpf"""
        mp = self.ctx.mp
        total = mp.mpc(0)
        witness = mp.mpf(0)
        for mono, coeff in poly.terms.items():
            term = self.coefficient(coeff) * self.g_part(mono.g2_exp, mono.g3_exp)
            for arg, p_exp, pp_exp in mono.factors:
                if p_exp:
                    term *= self.wp_power(arg, p_exp)
                if pp_exp:
                    term *= self.values(arg)[1]
            total += term
            witness += abs(term)
        return total, witness


def eval_elliptic_poly(ctx, p, pt):
    """Valor firmado y escala testigo Σ|contribución de cada monomio|"""
    if not p.terms:
        return BigComplex(ctx.mp.mpc(0), ctx.precision_bits), 0.0
    value, witness = PointValues(ctx, pt).evaluate(p)
    return BigComplex(value, ctx.precision_bits), float(witness)
