"""
Constructores exactos de los operadores de Calogero–Moser elípticos
"""

import logging
from fractions import Fraction
from functools import lru_cache

from diff_op import op_add, op_scale, permute_operator

from .notation import render_rows
from .systems import A2_NOTATION, B2_NOTATION
from .tables import TABLES

logger = logging.getLogger(__name__)

# Permutación cíclica 1→2→3→1 de los índices (base 0)
A2_CYCLE = (1, 2, 0)
B2_SWAP = (1, 0)


@lru_cache(maxsize=None)
def a2_L1():
    """Hamiltoniano −Δ + 4(℘12 + ℘23 + ℘31)"""
    return A2_NOTATION.build(TABLES['a2_L1'])


@lru_cache(maxsize=None)
def a2_L2():
    return A2_NOTATION.build(TABLES['a2_L2'])


@lru_cache(maxsize=None)
def a2_L3():
    return A2_NOTATION.build(TABLES['a2_L3'])


@lru_cache(maxsize=None)
def a2_I(pair):
    """
    I12 desde su tabla; I23 e I31 aplicando la permutación cíclica una o dos
    veces a índices de derivadas y argumentos.
    """
    pair = str(pair)
    logger.debug("Construyendo I%s", pair)
    if pair == '12':
        return A2_NOTATION.build(TABLES['a2_I12'])
    if pair == '23':
        return permute_operator(a2_I('12'), A2_CYCLE)
    if pair in ('31', '13'):
        return permute_operator(a2_I('23'), A2_CYCLE)
    raise ValueError(f"Par desconocido {pair!r}; use 12, 23 o 31")


@lru_cache(maxsize=None)
def a2_L4():
    """Combinación no simétrica I12 + 2·I23"""
    return op_add(a2_I('12'), op_scale(2, a2_I('23')))


@lru_cache(maxsize=None)
def b2_L1():
    """−Δ + 2(℘(x) + ℘(y) + 2℘(x+y) + 2℘(x−y))"""
    return B2_NOTATION.build(TABLES['b2_L1'])


@lru_cache(maxsize=None)
def b2_L():
    """L = ½·L1, el generador de los coeficientes B1 y B2"""
    return op_scale(Fraction(1, 2), b2_L1())


@lru_cache(maxsize=None)
def b2_M():
    return B2_NOTATION.build(TABLES['b2_M'])


@lru_cache(maxsize=None)
def b2_Ix():
    return B2_NOTATION.build(TABLES['b2_Ix'])


@lru_cache(maxsize=None)
def b2_Ix_printed():
    """I_x tal como está impreso; no es homogéneo y no conmuta con L"""
    return B2_NOTATION.build(TABLES['b2_Ix_printed'])


def ix_errata():
    """
    Filas (base 1) en que la tabla impresa de I_x difiere de la reconstruida,
    como (fila, impresa, corregida) reimpresas.
    """
    errata = []
    rows = zip(TABLES['b2_Ix_printed'], TABLES['b2_Ix'])
    for number, (printed, corrected) in enumerate(rows, start=1):
        if B2_NOTATION.build((printed,)) != B2_NOTATION.build((corrected,)):
            errata.append((number, render_rows((printed,)), render_rows((corrected,))))
    return errata


@lru_cache(maxsize=None)
def b2_Iy():
    """I_x con x ↔ y"""
    return permute_operator(b2_Ix(), B2_SWAP)


@lru_cache(maxsize=None)
def b2_L3():
    return op_add(b2_Ix(), op_scale(2, b2_Iy()))


def clear_caches():
    """Olvida los operadores construidos; tras cambiar TABLES se reconstruyen"""
    for builder in (a2_L1, a2_L2, a2_L3, a2_I, a2_L4, b2_L1, b2_L, b2_M, b2_Ix, b2_Ix_printed, b2_Iy, b2_L3):
        builder.cache_clear()


def render_table(name):
    """Reimpresión de la tabla de transcripción para compararla a ojo"""
    try:
        rows = TABLES[name]
    except KeyError:
        raise ValueError(f"No hay tabla {name!r}; disponibles: {', '.join(TABLES)}") from None
    return render_rows(rows)


# nombre -> (constructor, sistema, peso)
CATALOG = {
    'a2_L1': (a2_L1, 'a2', 2),
    'a2_L2': (a2_L2, 'a2', 1),
    'a2_L3': (a2_L3, 'a2', 3),
    'a2_I12': (lambda: a2_I('12'), 'a2', 4),
    'a2_I23': (lambda: a2_I('23'), 'a2', 4),
    'a2_I31': (lambda: a2_I('31'), 'a2', 4),
    'a2_L4': (a2_L4, 'a2', 4),
    'b2_L1': (b2_L1, 'b2', 2),
    'b2_L': (b2_L, 'b2', 2),
    'b2_M': (b2_M, 'b2', 4),
    'b2_Ix': (b2_Ix, 'b2', 5),
    'b2_Iy': (b2_Iy, 'b2', 5),
    'b2_L3': (b2_L3, 'b2', 5),
}
