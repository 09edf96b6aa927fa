"""
Raíces e1, e2, e3 de 4z³ − g2·z − g3
"""

from scalars import BigComplex

from .exceptions import DegenerateCurveError


def solve_e_roots(ctx):
    """Las tres raíces ordenadas por parte real y luego imaginaria"""
    mp = ctx.mp
    discriminant = ctx.g2_value ** 3 - 27 * ctx.g3_value ** 2
    scale = abs(ctx.g2_value) ** 3 + 27 * ctx.g3_value ** 2
    if abs(discriminant) <= scale * mp.ldexp(1, -ctx.precision_bits // 2):
        raise DegenerateCurveError(f"Discriminante casi nulo para {ctx!r}")
    roots = mp.polyroots(
        [4, 0, -ctx.g2_value, -ctx.g3_value],
        maxsteps=200,
        extraprec=ctx.precision_bits,
    )
    roots = [mp.mpc(r) for r in roots]
    # Ruido numérico por debajo de la precisión se redondea a cero
    tiny = mp.ldexp(1, -(ctx.precision_bits * 3) // 4)
    cleaned = []
    for r in roots:
        re = r.real if abs(r.real) > tiny else mp.mpf(0)
        im = r.imag if abs(r.imag) > tiny else mp.mpf(0)
        cleaned.append(mp.mpc(re, im))
    cleaned.sort(key=lambda r: (r.real, r.imag))
    return tuple(BigComplex(r, ctx.precision_bits) for r in cleaned)
