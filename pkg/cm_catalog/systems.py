"""
Sistemas A2 y B2: variables, argumentos y punto de semiperiodos
"""

from dataclasses import dataclass

from elliptic_ring import Argument, HalfPeriod

from .notation import Notation, linear_form


@dataclass(frozen=True, eq=False)
class System:
    name: str
    variables: tuple
    derivative_keys: tuple
    half_periods: dict
    symmetry_group_order: int

    @property
    def n(self):
        return len(self.variables)

    @property
    def arguments(self):
        return sorted(self.half_periods)


def _a2_argument(key):
    """'12' -> x1 − x2"""
    if len(key) != 2 or not key.isdigit():
        raise ValueError(f"Argumento A2 inválido {key!r}")
    coeffs = [0, 0, 0]
    coeffs[int(key[0]) - 1] += 1
    coeffs[int(key[1]) - 1] -= 1
    return tuple(coeffs)


def _b2_argument(text):
    return linear_form(text, ('x', 'y'))


A2 = System(
    name='a2',
    variables=('x1', 'x2', 'x3'),
    derivative_keys=('1', '2', '3'),
    # x1−x2 = ω1, x2−x3 = ω2, x1−x3 = ω1+ω2
    half_periods={
        Argument((1, -1, 0)): HalfPeriod.E1,
        Argument((0, 1, -1)): HalfPeriod.E2,
        Argument((1, 0, -1)): HalfPeriod.E3,
    },
    symmetry_group_order=6,
)

B2 = System(
    name='b2',
    variables=('x', 'y'),
    derivative_keys=('x', 'y'),
    # x = ω1, y = ω2; x+y y x−y caen en ω3 módulo la red
    half_periods={
        Argument((1, 0)): HalfPeriod.E1,
        Argument((0, 1)): HalfPeriod.E2,
        Argument((1, 1)): HalfPeriod.E3,
        Argument((1, -1)): HalfPeriod.E3,
    },
    symmetry_group_order=8,
)

SYSTEMS = {'a2': A2, 'b2': B2}

A2_NOTATION = Notation(A2.variables, A2.derivative_keys, _a2_argument)
B2_NOTATION = Notation(B2.variables, B2.derivative_keys, _b2_argument)


def get_system(name):
    try:
        return SYSTEMS[name.lower()]
    except KeyError:
        raise ValueError(f"Sistema desconocido {name!r}; use a2 o b2") from None
