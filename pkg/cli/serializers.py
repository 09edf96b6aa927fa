"""
Serializers para la aplicación cli
"""

from rest_framework import serializers

from scalars import format_rational, parse_rational

SYSTEM_CHOICES = ['a2', 'b2', 'both']
CHECK_CHOICES = [
    'commutators', 'cubic', 'pair', 'quartic', 'sum',
    'sv-remark', 'separation', 'independence', 'catalog', 'all',
]
TARGET_CHOICES = ['A1', 'A2', 'A3', 'B1', 'B2']


def parse_context(text):
    """'g2,g3' con racionales 'p/q' -> (Fraction, Fraction)"""
    parts = [part.strip() for part in str(text).split(',')]
    if len(parts) != 2:
        raise ValueError(f"Contexto {text!r}: se esperaba 'g2,g3'")
    return parse_rational(parts[0]), parse_rational(parts[1])


class RunConfigSerializer(serializers.Serializer):
    """
    Configuración de una ejecución. Los contextos llegan como texto "p/q,p/q"
    y salen normalizados; nunca se aceptan flotantes.
    """
    system = serializers.ChoiceField(choices=SYSTEM_CHOICES, default='both')
    checks = serializers.ListField(
        child=serializers.ChoiceField(choices=CHECK_CHOICES), default=['all'],
    )
    target = serializers.ChoiceField(choices=TARGET_CHOICES, required=False, allow_null=True)
    precision_bits = serializers.IntegerField()
    trials = serializers.IntegerField()
    seed = serializers.IntegerField()
    contexts = serializers.ListField(child=serializers.CharField(), allow_empty=True)
    cache_dir = serializers.CharField(allow_null=True, required=False)
    report_path = serializers.CharField(allow_null=True, required=False)
    threads = serializers.IntegerField(min_value=1, default=1)

    def validate_precision_bits(self, value):
        """La precisión mínima de trabajo es de 64 bits"""
        if value < 64:
            raise serializers.ValidationError(
                f"precision_bits debe ser ≥ 64 (se recibió {value})"
            )
        return value

    def validate_trials(self, value):
        if value < 3:
            raise serializers.ValidationError(
                f"trials debe ser ≥ 3 (se recibió {value})"
            )
        return value

    def validate_contexts(self, value):
        """Cada contexto es 'g2,g3' racional con discriminante no nulo"""
        if not value:
            raise serializers.ValidationError("Se necesita al menos un contexto")
        normalized = []
        for text in value:
            try:
                g2, g3 = parse_context(text)
            except ValueError as exc:
                raise serializers.ValidationError(str(exc))
            if g2 ** 3 - 27 * g3 ** 2 == 0:
                raise serializers.ValidationError(
                    f"Contexto degenerado ({text}): g2³ − 27g3² = 0"
                )
            normalized.append(f"{format_rational(g2)},{format_rational(g3)}")
        return normalized

    def validate(self, attrs):
        """Validaciones cruzadas"""
        target = attrs.get('target')
        system = attrs.get('system')
        if target and system in ('a2', 'b2') and target[0].lower() != system[0]:
            raise serializers.ValidationError({
                'target': f"El objetivo {target} no pertenece al sistema {system}"
            })
        if 'all' in attrs.get('checks', []):
            attrs['checks'] = [c for c in CHECK_CHOICES if c != 'all']
        return attrs


class VerificationReportSerializer(serializers.Serializer):
    """
    Orden fijo de campos del informe JSON
    """
    check = serializers.CharField()
    system = serializers.CharField()
    status = serializers.ChoiceField(choices=['pass', 'fail', 'inconclusive'])
    max_residual_ratio = serializers.FloatField()
    witness_scale = serializers.FloatField()
    trials = serializers.IntegerField()
    seed = serializers.IntegerField()
    precision_bits = serializers.IntegerField()
    contexts = serializers.ListField(child=serializers.CharField())
    elapsed_ms = serializers.IntegerField()
    structural_zero = serializers.BooleanField()
    details = serializers.ListField(child=serializers.DictField())
    notes = serializers.ListField(child=serializers.CharField())


class TermDifferenceSerializer(serializers.Serializer):
    monomial = serializers.CharField()
    printed = serializers.CharField()
    derived = serializers.CharField()
    weight = serializers.IntegerField()


class DerivationReportSerializer(serializers.Serializer):
    """
    Resultado de derive: polinomio canónico, diferencias y comprobación de ida y vuelta
    """
    target = serializers.ChoiceField(choices=TARGET_CHOICES)
    system = serializers.CharField()
    status = serializers.ChoiceField(choices=['match', 'mismatch', 'failed'])
    derived = serializers.CharField(allow_blank=True)
    derived_text = serializers.CharField(allow_blank=True)
    weight = serializers.CharField(allow_blank=True)
    diff = TermDifferenceSerializer(many=True)
    flagged = serializers.ListField(child=serializers.CharField())
    commuting = serializers.BooleanField()
    round_trip = serializers.CharField(allow_blank=True)
    descent = serializers.ListField(child=serializers.DictField())
    elapsed_ms = serializers.IntegerField()
    notes = serializers.ListField(child=serializers.CharField())


class RunReportSerializer(serializers.Serializer):
    """Envoltorio del archivo --report: eco de la configuración y los informes"""
    command = serializers.CharField()
    exit_code = serializers.IntegerField()
    config = serializers.DictField()
    reports = serializers.ListField(child=serializers.DictField())
