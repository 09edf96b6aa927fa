"""
Verificación de conmutadores y relaciones con el oráculo de anulación
"""

import logging
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations

from cm_catalog import a2_I, a2_L1, a2_L2, a2_L3, b2_Ix, b2_Iy, b2_L, b2_M
from diff_op import op_commutator
from numeric_eval import STATUS_FAIL, STATUS_INCONCLUSIVE, STATUS_PASS, vanishing_oracle

from .evaluate import OperatorMemo, evaluate_abstract

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    check: str
    system: str
    status: str
    max_residual_ratio: float = 0.0
    witness_scale: float = 0.0
    trials: int = 0
    seed: int = 0
    precision_bits: int = 0
    contexts: list = field(default_factory=list)
    elapsed_ms: int = 0
    structural_zero: bool = False
    details: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return self.status == STATUS_PASS

    def as_dict(self):
        return asdict(self)

    @classmethod
    def from_oracle(cls, check, system, result, contexts, seed, started, label=None, notes=()):
        details = [
            {**({'label': label} if label else {}), **asdict(d)} for d in result.details
        ]
        return cls(
            check=check,
            system=system,
            status=result.status,
            max_residual_ratio=result.max_ratio,
            witness_scale=result.witness_scale,
            trials=result.trials,
            seed=seed,
            precision_bits=result.precision_bits,
            contexts=[c.label for c in contexts],
            elapsed_ms=elapsed_since(started),
            structural_zero=result.structural_zero,
            details=details,
            notes=list(notes) + ([result.message] if result.message else []),
        )


def elapsed_since(started):
    return int((time.perf_counter() - started) * 1000)


def combine_status(statuses):
    """fail domina a inconclusive, que domina a pass"""
    statuses = list(statuses)
    if STATUS_FAIL in statuses:
        return STATUS_FAIL
    if STATUS_INCONCLUSIVE in statuses:
        return STATUS_INCONCLUSIVE
    return STATUS_PASS


def system_integrals(system):
    """Operadores (nombre, DiffOp) cuyos conmutadores se verifican"""
    if system == 'a2':
        return [
            ('L1', a2_L1()), ('L2', a2_L2()), ('L3', a2_L3()),
            ('I12', a2_I('12')), ('I23', a2_I('23')), ('I31', a2_I('31')),
        ]
    if system == 'b2':
        return [('L', b2_L()), ('M', b2_M()), ('Ix', b2_Ix()), ('Iy', b2_Iy())]
    raise ValueError(f"Sistema desconocido {system!r}")


# Pares que deben conmutar exactamente (sin oráculo)
STRUCTURAL_PAIRS = {('L1', 'L2')}
REQUIRED_B2_PAIRS = {('L', 'M'), ('L', 'Ix'), ('L', 'Iy')}


def verify_commutators(system, contexts, trials, seed, executor=None, blocks=1):
    """
    Todos los conmutadores por pares. [L1, L2] debe anularse estructuralmente;
    el resto pasa por el oráculo. En B2 se informa de todos los pares pero el
    estado sale sólo de los requeridos: [L,M], [L,I_x] y [L,I_y].
    """
    started = time.perf_counter()
    details = []
    statuses = []
    max_ratio = 0.0
    witness = 0.0
    notes = []
    for (na, a), (nb, b) in combinations(system_integrals(system), 2):
        label = f"[{na},{nb}]"
        residual = op_commutator(a, b, executor=executor, blocks=blocks)
        if (na, nb) in STRUCTURAL_PAIRS:
            status = STATUS_PASS if residual.is_zero() else STATUS_FAIL
            details.append({'label': label, 'status': status, 'structural_zero': residual.is_zero()})
            statuses.append(status)
            continue
        result = vanishing_oracle(contexts, residual, trials, seed, executor=executor)
        logger.info("Conmutador %s: %s (razón %.3e)", label, result.status, result.max_ratio)
        worst = max(result.details, key=lambda d: d.max_ratio, default=None)
        required = system == 'a2' or (na, nb) in REQUIRED_B2_PAIRS
        details.append({
            'label': label,
            'status': result.status,
            'structural_zero': result.structural_zero,
            'required': required,
            'max_ratio': result.max_ratio,
            **({'worst': asdict(worst)} if worst else {}),
        })
        if not required:
            continue
        statuses.append(result.status)
        max_ratio = max(max_ratio, result.max_ratio)
        witness = max(witness, result.witness_scale)
    if system == 'b2':
        notes.append('requeridos: [L,M], [L,Ix], [L,Iy]; el resto sólo se informa')
    return VerificationReport(
        check='commutators',
        system=system,
        status=combine_status(statuses),
        max_residual_ratio=max_ratio,
        witness_scale=witness,
        trials=trials,
        seed=seed,
        precision_bits=contexts[0].precision_bits,
        contexts=[c.label for c in contexts],
        elapsed_ms=elapsed_since(started),
        structural_zero=all(d['structural_zero'] for d in details),
        details=details,
        notes=notes,
    )


def verify_relation(relation, binding, contexts, trials, seed, check='relation', system='',
                    labels=None, memo=None, executor=None, blocks=1):
    """Construye el residuo R = Q(operadores) y lo pasa por el oráculo"""
    started = time.perf_counter()
    memo = memo if memo is not None else OperatorMemo()
    residual = evaluate_abstract(relation, binding, labels, memo, executor, blocks)
    logger.info(
        "Residuo de %s: orden %s, %s multi-índices", check, residual.order, len(residual.terms),
    )
    result = vanishing_oracle(contexts, residual, trials, seed, executor=executor)
    return VerificationReport.from_oracle(check, system, result, contexts, seed, started)
