"""
Tablas de transcripción de los operadores, fila a fila en el orden impreso

A2: ℘ij = ℘(x_i − x_j), dk = ∂/∂x_k.
B2: variables x, y; dx = ∂/∂x, dy = ∂/∂y.
Las entradas ℘″ (Ppp) se reescriben al construir como 6℘² − g2/2.
"""

A2_L1 = (
    ('-1', '1', 'd1^2'),
    ('-1', '1', 'd2^2'),
    ('-1', '1', 'd3^2'),
    ('4', 'P12 + P23 + P31', '1'),
)

A2_L2 = (
    ('1', '1', 'd1'),
    ('1', '1', 'd2'),
    ('1', '1', 'd3'),
)

A2_L3 = (
    ('1', '1', 'd1*d2*d3'),
    ('2', 'P12', 'd3'),
    ('2', 'P23', 'd1'),
    ('2', 'P31', 'd2'),
)

A2_I12 = (
    ('1', '1', '(d1-d3)^2*(d2-d3)^2'),
    ('-8', 'P23', '(d1-d3)^2'),
    ('-8', 'P13', '(d2-d3)^2'),
    ('4', 'P12 - P13 - P23', '(d1-d3)*(d2-d3)'),
    ('-2', 'Pp12 + Pp13 + 6*Pp23', '(d1-d3)'),
    ('-2', '-Pp12 + 6*Pp13 + Pp23', '(d2-d3)'),
    ('1', '-2*Ppp12 - 6*Ppp13 - 6*Ppp23', '1'),
    ('4', 'P12^2 + P13^2 + P23^2', '1'),
    ('8', 'P12*P13 + P12*P23 + 7*P13*P23', '1'),
)

B2_L1 = (
    ('-1', '1', 'dx^2'),
    ('-1', '1', 'dy^2'),
    ('2', 'P(x) + P(y) + 2*P(x+y) + 2*P(x-y)', '1'),
)

B2_M = (
    ('1', '1', 'dx^2*dy^2'),
    ('-2', 'P(y)', 'dx^2'),
    ('-2', 'P(x)', 'dy^2'),
    ('-4', 'P(x+y) - P(x-y)', 'dx*dy'),
    ('-2', 'Pp(x+y) + Pp(x-y)', 'dx'),
    ('-2', 'Pp(x+y) - Pp(x-y)', 'dy'),
    ('-2', 'Ppp(x+y) + Ppp(x-y)', '1'),
    ('4', 'P(x+y)^2 + P(x-y)^2', '1'),
    ('4', ('P(x) + P(y)', 'P(x+y) + P(x-y)'), '1'),
    ('-8', 'P(x+y)*P(x-y)', '1'),
    ('-4', 'P(x)*P(y)', '1'),
)

B2_IX_PRINTED = (
    ('1', '1', 'dx^5'),
    ('-5', '1', 'dx^3*dy^2'),
    ('-10', '1/2*P(x) - P(y) + P(x+y) + P(x-y)', 'dx^3'),
    ('30', 'P(x+y) - P(x-y)', 'dx^2*dy'),
    ('15', 'P(x)', 'dx*dy^2'),
    ('-15/2', 'P(x)', 'dx^2 - dy^2'),
    ('30', 'P(x+y) - P(x-y)', 'dx*dy'),
    ('1', ('10*Ppp(x+y) - 10*Ppp(x-y) - 30*P(y)*P(x+y) + 30*P(y)*P(x-y)'), 'dy'),
    ('1', (
        '30*P(y)*P(x) - 30*P(y)*P(x+y) - 30*P(y)*P(x-y) + 120*P(x+y)*P(x-y)'
        ' + 10*Ppp(x+y) + 10*Ppp(x-y) - 5*Ppp(x) - 9/2*g2'
    ), 'dx'),
    ('-15', ('Pp(x+y) + Pp(x-y)', 'P(x) + P(y)'), '1'),
    ('-15', 'Pp(x)*P(y) + Pp(y)*P(x)', '1'),
    ('60', ('Pp(x+y) + Pp(x-y)', 'P(x+y) + P(x-y)'), '1'),
)

# Reconstruida desde [L1, I_x] = 0 con símbolo ξx⁵ − 5ξx³ξy²; difiere de la impresa
# en las filas 6, 7, 8 y 11 (ix_errata las lista)
B2_IX = (
    ('1', '1', 'dx^5'),
    ('-5', '1', 'dx^3*dy^2'),
    ('-10', '1/2*P(x) - P(y) + P(x+y) + P(x-y)', 'dx^3'),
    ('30', 'P(x+y) - P(x-y)', 'dx^2*dy'),
    ('15', 'P(x)', 'dx*dy^2'),
    ('-15/2', 'Pp(x)', 'dx^2 - dy^2'),
    ('30', 'Pp(x+y) - Pp(x-y)', 'dx*dy'),
    ('1', ('10*Ppp(x+y) - 10*Ppp(x-y) - 30*P(x)*P(x+y) + 30*P(x)*P(x-y)'), 'dy'),
    ('1', (
        '30*P(y)*P(x) - 30*P(y)*P(x+y) - 30*P(y)*P(x-y) + 120*P(x+y)*P(x-y)'
        ' + 10*Ppp(x+y) + 10*Ppp(x-y) - 5*Ppp(x) - 9/2*g2'
    ), 'dx'),
    ('-15', ('Pp(x+y) + Pp(x-y)', 'P(x) + P(y)'), '1'),
    ('-15', 'Pp(x)*P(x) - Pp(x)*P(y)', '1'),
    ('60', ('Pp(x+y) + Pp(x-y)', 'P(x+y) + P(x-y)'), '1'),
)

TABLES = {
    'a2_L1': A2_L1,
    'a2_L2': A2_L2,
    'a2_L3': A2_L3,
    'a2_I12': A2_I12,
    'b2_L1': B2_L1,
    'b2_M': B2_M,
    'b2_Ix': B2_IX,
    'b2_Ix_printed': B2_IX_PRINTED,
}
