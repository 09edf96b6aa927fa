"""
Catálogo de operadores: A2 (L1, L2, L3, I12, I23, I31) y B2 (L, M, I_x, I_y)
"""

from .notation import Notation, NotationError
from .operators import (
    CATALOG,
    a2_I,
    a2_L1,
    a2_L2,
    a2_L3,
    a2_L4,
    b2_Ix,
    b2_Ix_printed,
    b2_Iy,
    b2_L,
    b2_L1,
    b2_L3,
    b2_M,
    clear_caches,
    ix_errata,
    render_table,
)
from .systems import A2, B2, SYSTEMS, System, get_system
from .tables import TABLES

__all__ = (
    'A2',
    'B2',
    'CATALOG',
    'SYSTEMS',
    'TABLES',
    'Notation',
    'NotationError',
    'System',
    'a2_I',
    'a2_L1',
    'a2_L2',
    'a2_L3',
    'a2_L4',
    'b2_Ix',
    'b2_Ix_printed',
    'b2_Iy',
    'b2_L',
    'b2_L1',
    'b2_L3',
    'b2_M',
    'clear_caches',
    'get_system',
    'ix_errata',
    'render_table',
)
