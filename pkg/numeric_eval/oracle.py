"""
Oráculo de anulación: certifica numéricamente que cada coeficiente de un
residuo es cero, relativo a su masa de cancelación.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .evaluate import PointValues
from .exceptions import SamplingError, SeriesNotConvergedError
from .sampling import sample_points

logger = logging.getLogger(__name__)

STATUS_PASS = 'pass'
STATUS_FAIL = 'fail'
STATUS_INCONCLUSIVE = 'inconclusive'

MAX_SHRINKS = 3


@dataclass
class OracleDetail:
    coefficient_multiindex: str
    max_ratio: float
    point_index: int
    context_index: int


@dataclass
class OracleResult:
    status: str
    max_ratio: float = 0.0
    witness_scale: float = 0.0
    trials: int = 0
    precision_bits: int = 0
    structural_zero: bool = False
    details: list = field(default_factory=list)
    message: str = ''

    @property
    def passed(self):
        return self.status == STATUS_PASS


def threshold_for(precision_bits):
    return 2.0 ** -(precision_bits / 2)


def _coefficients(residual):
    """Pares (etiqueta, EllipticPoly) de un DiffOp o de un dict"""
    if hasattr(residual, 'terms') and hasattr(residual, 'n'):
        return [(str(list(alpha)), coeff) for alpha, coeff in residual.sorted_terms()], residual.n
    items = sorted(residual.items(), key=lambda item: str(item[0]))
    return [(str(label), poly) for label, poly in items], None


def _evaluate_point(job):
    ctx, point, coefficients = job
    values = PointValues(ctx, point)
    rows = []
    try:
        for label, poly in coefficients:
            value, witness = values.evaluate(poly)
            ratio = abs(value) / witness if witness else ctx.mp.mpf(0)
            rows.append((label, float(ratio), float(witness)))
    except SeriesNotConvergedError as exc:
        logger.debug("Punto descartado: %s", exc)
        return None
    return rows


def vanishing_oracle(contexts, residual, trials, seed, executor=None, n_vars=None,
                     arguments=None, require_contexts=2):
    """
    Pasa sólo si |valor| ≤ testigo·2^−(bits/2) para todo coeficiente, punto y
    contexto. Los puntos que no convergen se remuestrean a escala menor; si
    aun así falla, el resultado es inconcluso.
    """
    if trials < 3:
        raise ValueError(f"Se necesitan al menos 3 ensayos, se pidieron {trials}")
    if len({(c.g2, c.g3) for c in contexts}) < require_contexts:
        raise ValueError(f"Se necesitan al menos {require_contexts} contextos (g2, g3) distintos")
    coefficients, op_vars = _coefficients(residual)
    n_vars = n_vars or op_vars
    precision_bits = contexts[0].precision_bits
    threshold = threshold_for(precision_bits)
    if not coefficients:
        return OracleResult(
            STATUS_PASS, trials=trials, precision_bits=precision_bits, structural_zero=True,
            message='residuo estructuralmente nulo',
        )

    jobs = []
    for ci, ctx in enumerate(contexts):
        for pi, point in enumerate(sample_points(ctx, n_vars, trials, seed, arguments)):
            jobs.append((ci, pi, ctx, point))

    mapper = executor.map if executor is not None else map
    results = list(mapper(_evaluate_point, [(ctx, pt, coefficients) for _, _, ctx, pt in jobs]))

    for shrink in range(1, MAX_SHRINKS + 1):
        failed = [i for i, rows in enumerate(results) if rows is None]
        if not failed:
            break
        logger.info("Remuestreando %s puntos a escala reducida (intento %s)", len(failed), shrink)
        for i in failed:
            ci, pi, ctx, _ = jobs[i]
            try:
                scale = ctx.sample_scale / Fraction(2 ** shrink)
                replacement = sample_points(
                    ctx, n_vars, 1, f"{seed}:{ci}:{pi}:{shrink}", arguments, scale=scale,
                )[0]
            except SamplingError:
                continue
            jobs[i] = (ci, pi, ctx, replacement)
            results[i] = _evaluate_point((ctx, replacement, coefficients))

    if any(rows is None for rows in results):
        return OracleResult(
            STATUS_INCONCLUSIVE, trials=trials, precision_bits=precision_bits,
            message='la serie de Laurent no convergió en algunos puntos',
        )

    worst = {}
    max_ratio = 0.0
    max_witness = 0.0
    for (ci, pi, _, _), rows in zip(jobs, results):
        for label, ratio, witness in rows:
            max_witness = max(max_witness, witness)
            if label not in worst or ratio > worst[label].max_ratio:
                worst[label] = OracleDetail(label, ratio, pi, ci)
            max_ratio = max(max_ratio, ratio)

    status = STATUS_PASS if max_ratio <= threshold else STATUS_FAIL
    details = [worst[label] for label, _ in coefficients]
    logger.info(
        "Oráculo: %s coeficientes, %s puntos, razón máxima %.3e (%s)",
        len(coefficients), len(jobs), max_ratio, status,
    )
    return OracleResult(
        status, max_ratio=max_ratio, witness_scale=max_witness, trials=trials,
        precision_bits=precision_bits, details=details,
    )
