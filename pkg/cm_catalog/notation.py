"""
Notación de las tablas de transcripción

Cada fila es (escala, coeficiente, derivada) y representa
escala·coeficiente·derivada, con el coeficiente a la izquierda.

- coeficiente: suma "P12 + P13 + 6*Pp23" o tupla de sumas que se multiplican.
  Factores: P<arg>, Pp<arg>, Ppp<arg> (℘, ℘′, ℘″), g2, g3, con ^k opcional.
- derivada: suma de productos de dK^k o de formas lineales "(d1-d3)^2".
  "1" es la identidad.
"""

import re
from fractions import Fraction

from diff_op import DiffOp, op_compose, op_power, op_scale
from elliptic_ring import EllipticPoly, g2, g3, wp, wp_prime, wp_second
from scalars import parse_rational

_SUM_SPLIT = re.compile(r'\s+([+-])\s+')
_RATIONAL = re.compile(r'^\d+(/\d+)?$')
_FACTOR = re.compile(r'^(Ppp|Pp|P)(?:\((?P<paren>[^)]*)\)|(?P<digits>\d+))$')
_LINEAR_TERM = re.compile(r'([+-]?)(\d*)([a-z]\w*|\d)')


class NotationError(ValueError):
    """Fila de tabla mal escrita"""


def linear_form(text, names):
    """Coeficientes enteros de una forma lineal como "x+y" o "x1-x3" """
    coeffs = [0] * len(names)
    for sign, digits, name in _LINEAR_TERM.findall(text.replace(' ', '')):
        if name not in names:
            raise NotationError(f"Variable desconocida {name!r} en {text!r}")
        value = int(digits) if digits else 1
        coeffs[names.index(name)] += -value if sign == '-' else value
    return tuple(coeffs)


def split_sum(text):
    """Produce (signo, término) de una suma escrita con espacios alrededor de + y −"""
    text = text.strip()
    sign = 1
    if text.startswith('-'):
        sign = -1
        text = text[1:].lstrip()
    parts = _SUM_SPLIT.split(text)
    yield sign, parts[0]
    for op, term in zip(parts[1::2], parts[2::2]):
        yield (1 if op == '+' else -1), term


def _power_split(token):
    if '^' in token and not token.endswith(')'):
        base, exp = token.rsplit('^', 1)
        return base, int(exp)
    return token, 1


class Notation:
    """Intérprete de la notación para un sistema de variables"""

    def __init__(self, variables, derivative_keys, argument_parser):
        self.variables = tuple(variables)
        self.derivative_keys = tuple(derivative_keys)
        self.parse_argument = argument_parser

    @property
    def n(self):
        return len(self.variables)

    def factor(self, token):
        base, exp = _power_split(token)
        if base == '1':
            return EllipticPoly.constant(1)
        if base == 'g2':
            return g2() ** exp
        if base == 'g3':
            return g3() ** exp
        match = _FACTOR.match(base)
        if not match:
            raise NotationError(f"Factor desconocido {token!r}")
        raw = self.parse_argument(match.group('paren') or match.group('digits'))
        builder = {'P': wp, 'Pp': wp_prime, 'Ppp': wp_second}[match.group(1)]
        return builder(raw) ** exp

    def product(self, text):
        result = EllipticPoly.constant(1)
        for token in text.split('*'):
            token = token.strip()
            if _RATIONAL.match(token):
                result = result.scale(parse_rational(token))
            else:
                result = result * self.factor(token)
        return result

    def coefficient(self, entry):
        sums = entry if isinstance(entry, tuple) else (entry,)
        result = EllipticPoly.constant(1)
        for text in sums:
            total = EllipticPoly()
            for sign, term in split_sum(text):
                total = total + self.product(term).scale(sign)
            result = result * total
        return result

    def derivative_factor(self, token):
        base, exp = _power_split(token)
        if base.startswith('(') and base.endswith(')'):
            keys = tuple(f"d{k}" for k in self.derivative_keys)
            inner = base[1:-1].replace(' ', '')
            coeffs = [0] * self.n
            for sign, digits, name in re.findall(r'([+-]?)(\d*)(d\w)', inner):
                if name not in keys:
                    raise NotationError(f"Derivada desconocida {name!r}")
                value = int(digits) if digits else 1
                coeffs[keys.index(name)] += -value if sign == '-' else value
            form = DiffOp.linear_form(coeffs)
        elif base.startswith('d') and base[1:] in self.derivative_keys:
            form = DiffOp.partial(self.n, self.derivative_keys.index(base[1:]))
        else:
            raise NotationError(f"Derivada desconocida {token!r}")
        return op_power(form, exp)

    def derivative(self, text):
        total = DiffOp.zero(self.n)
        for sign, term in split_sum(text):
            op = DiffOp.identity(self.n)
            scale = Fraction(sign)
            for token in term.split('*'):
                token = token.strip()
                if token == '1':
                    continue
                if _RATIONAL.match(token):
                    scale *= parse_rational(token)
                    continue
                op = op_compose(op, self.derivative_factor(token))
            total = total + op_scale(scale, op)
        return total

    def build(self, rows):
        """Suma de escala·coeficiente·derivada sobre todas las filas"""
        total = DiffOp.zero(self.n)
        for scale, coefficient, derivative in rows:
            coeff = self.coefficient(coefficient).scale(parse_rational(scale))
            total = total + op_scale(coeff, self.derivative(derivative))
        return total


def render_rows(rows):
    """Reimprime una tabla fila a fila en el orden de transcripción"""
    lines = []
    for scale, coefficient, derivative in rows:
        sums = coefficient if isinstance(coefficient, tuple) else (coefficient,)
        coeff_text = ''.join(f"({s})" for s in sums) if sums != ('1',) else ''
        deriv_text = '' if derivative == '1' else f"[{derivative}]"
        lines.append(f"{scale}{coeff_text}{deriv_text}")
    return '\n'.join(lines)
