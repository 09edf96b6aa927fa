"""
Puntos de muestreo deterministas cerca del origen
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from elliptic_ring import Argument
from scalars.bigcomplex import exact_mpf

from .exceptions import SamplingError

MIN_RADIUS = Fraction(1, 50)
MAX_RADIUS = Fraction(3, 50)
MIN_SEPARATION = Fraction(1, 100)
MAX_RETRIES = 1000
_GRID = 10 ** 6


@dataclass(frozen=True)
class SamplePoint:
    """Valores complejos exactos (racionales) de cada variable"""

    assignment: tuple  # ((re, im), ...) como Fraction

    def argument_value(self, coeffs):
        re = sum(c * x for c, (x, _) in zip(coeffs, self.assignment))
        im = sum(c * y for c, (_, y) in zip(coeffs, self.assignment))
        return re, im

    def to_mpc(self, mp, coeffs):
        re, im = self.argument_value(coeffs)
        return mp.mpc(exact_mpf(mp, re), exact_mpf(mp, im))


def default_arguments(n_vars):
    """Todas las formas x_i, x_i + x_j, x_i − x_j"""
    forms = []
    for i in range(n_vars):
        single = [0] * n_vars
        single[i] = 1
        forms.append(Argument(tuple(single)))
    for i, j in combinations(range(n_vars), 2):
        for sign in (1, -1):
            form = [0] * n_vars
            form[i] = 1
            form[j] = sign
            forms.append(Argument(tuple(form)))
    return forms


def _modulus_squared(re, im):
    return re * re + im * im


def sample_points(ctx, n_vars, count, seed, arguments=None, scale=None):
    """
    count puntos reproducibles con |x_i| en [0.02, 0.06] y cada argumento con
    módulo en [0.01, escala]. Con una escala menor que la del contexto los
    radios y la separación mínima se reducen en la misma proporción.
    Se remuestrea ante casi-colisiones.
    """
    if count < 1:
        raise ValueError("Se necesita al menos un punto de muestreo")
    scale = Fraction(scale if scale is not None else ctx.sample_scale)
    arguments = list(arguments) if arguments is not None else default_arguments(n_vars)
    shrink = min(Fraction(1), scale / ctx.sample_scale)
    min_radius, max_radius = MIN_RADIUS * shrink, MAX_RADIUS * shrink
    min_separation = MIN_SEPARATION * shrink
    rng = random.Random(f"{seed}:{n_vars}:{ctx.label}")
    points = []
    retries = 0
    while len(points) < count:
        coords = []
        for _ in range(n_vars):
            while True:
                re = Fraction(rng.randint(-_GRID, _GRID), _GRID) * max_radius
                im = Fraction(rng.randint(-_GRID, _GRID), _GRID) * max_radius
                if min_radius ** 2 <= _modulus_squared(re, im) <= max_radius ** 2:
                    break
            coords.append((re, im))
        point = SamplePoint(tuple(coords))
        valid = True
        for arg in arguments:
            mod2 = _modulus_squared(*point.argument_value(arg.coeffs))
            if not min_separation ** 2 <= mod2 <= scale ** 2:
                valid = False
                break
        if valid:
            points.append(point)
            continue
        retries += 1
        if retries > MAX_RETRIES:
            raise SamplingError(
                f"Sin puntos válidos tras {MAX_RETRIES} reintentos (escala {scale})"
            )
    return points
