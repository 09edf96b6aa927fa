"""
Diferencias término a término entre un coeficiente derivado y el impreso
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class TermDifference:
    monomial: str
    printed: Fraction
    derived: Fraction
    weight: int

    def as_dict(self):
        return {
            'monomial': self.monomial,
            'printed': str(self.printed),
            'derived': str(self.derived),
            'weight': self.weight,
        }


def diff_against_printed(derived, printed, weights):
    """Lista vacía si coinciden; si no, un TermDifference por monomio distinto"""
    a, b = derived._align(printed)
    differences = []
    for exps in sorted(set(a.terms) | set(b.terms), reverse=True):
        got = a.terms.get(exps, Fraction(0))
        want = b.terms.get(exps, Fraction(0))
        if got != want:
            differences.append(
                TermDifference(a.monomial_text(exps), want, got, a.weight_of(exps, weights))
            )
    return differences
