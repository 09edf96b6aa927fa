"""
Serialización canónica de operadores (formato de la caché)

    cmspec-diffop <versión>
    n <n>
    vars <x1> <x2> ...
    D[a,b,...] | <monomio> : num/den
    ...
    sha256 <hash del cuerpo>
"""

import hashlib

from elliptic_ring import EllipticPoly, parse_monomial
from elliptic_ring.poly import format_monomial
from scalars import format_rational, parse_rational

from .exceptions import CacheIntegrityError
from .operator import DiffOp

FORMAT_TAG = 'cmspec-diffop'


def _body_lines(op):
    for alpha, coeff in op.sorted_terms():
        index = ','.join(str(k) for k in alpha)
        for mono, value in coeff.sorted_terms():
            yield f"D[{index}] | {format_monomial(mono)} : {format_rational(value)}"


def body_hash(body):
    return hashlib.sha256(body.encode('utf-8')).hexdigest()


def dump_diffop(op, variables, version):
    """Texto canónico con hash de integridad"""
    header = [f"{FORMAT_TAG} {version}", f"n {op.n}", f"vars {' '.join(variables)}"]
    body = '\n'.join(header + list(_body_lines(op)))
    return f"{body}\nsha256 {body_hash(body)}\n"


def load_diffop(text, version):
    """Reconstruye el operador verificando versión e integridad"""
    lines = text.rstrip('\n').split('\n')
    if len(lines) < 4 or not lines[-1].startswith('sha256 '):
        raise CacheIntegrityError("Falta el hash de integridad")
    body = '\n'.join(lines[:-1])
    if body_hash(body) != lines[-1].split(' ', 1)[1].strip():
        raise CacheIntegrityError("Hash de integridad no coincide")
    tag, _, found_version = lines[0].partition(' ')
    if tag != FORMAT_TAG or found_version != str(version):
        raise CacheIntegrityError(f"Versión {found_version!r} distinta de {version!r}")
    n = int(lines[1].split()[1])
    terms = {}
    for line in lines[3:-1]:
        index_part, rest = line.split(' | ', 1)
        mono_text, coeff_text = rest.rsplit(' : ', 1)
        alpha = tuple(int(k) for k in index_part[2:-1].split(','))
        slot = terms.setdefault(alpha, {})
        slot[parse_monomial(mono_text)] = parse_rational(coeff_text)
    return DiffOp(n, {alpha: EllipticPoly(monos) for alpha, monos in terms.items()})
