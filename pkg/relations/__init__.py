"""
Relaciones algebraicas entre integrales cuánticas: construcción, verificación
y derivación
"""

from .abstract import AbstractIntegralPoly, RelationPolynomial, WeightReport
from .coefficients import (
    A2_WEIGHTS,
    B2_WEIGHTS,
    BCoefficients,
    a2_auxiliaries,
    build_A_coefficients,
    build_B_coefficients,
    build_a2_relations,
    build_b2_relations,
)
from .compare import TermDifference, diff_against_printed
from .derive import (
    DescentStep,
    ElementarySymmetric,
    derive_elementary_symmetric,
    express_in_integrals,
)
from .evaluate import OperatorMemo, ProductBuilder, evaluate_abstract, product_key
from .exceptions import DescentStalledError, NotExpressibleError, OddPowerError, UnboundGeneratorError
from .remark import curve_from_cubic, expected_curve, sv_remark_check
from .spotchecks import jacobian_rank, orbit, separation_check, symbol_independence_check
from .verify import VerificationReport, combine_status, system_integrals, verify_commutators, verify_relation

__all__ = (
    'A2_WEIGHTS',
    'B2_WEIGHTS',
    'AbstractIntegralPoly',
    'BCoefficients',
    'DescentStalledError',
    'DescentStep',
    'ElementarySymmetric',
    'NotExpressibleError',
    'OddPowerError',
    'OperatorMemo',
    'ProductBuilder',
    'RelationPolynomial',
    'TermDifference',
    'UnboundGeneratorError',
    'VerificationReport',
    'WeightReport',
    'a2_auxiliaries',
    'build_A_coefficients',
    'build_B_coefficients',
    'build_a2_relations',
    'build_b2_relations',
    'combine_status',
    'curve_from_cubic',
    'derive_elementary_symmetric',
    'diff_against_printed',
    'evaluate_abstract',
    'expected_curve',
    'express_in_integrals',
    'jacobian_rank',
    'orbit',
    'product_key',
    'separation_check',
    'sv_remark_check',
    'symbol_independence_check',
    'system_integrals',
    'verify_commutators',
    'verify_relation',
)
