"""
Caché en disco de productos de operadores

Cada entrada es un archivo <sha256(nombre:versión)>.diffop con la
serialización canónica del operador y su hash de integridad. Un cambio de
versión cambia la clave, así que las entradas viejas simplemente no se leen.
"""

import hashlib
import logging
import os
import threading
from pathlib import Path

from diff_op import CacheIntegrityError, dump_diffop, load_diffop
from cm_catalog import A2, B2
from relations import OperatorMemo

logger = logging.getLogger(__name__)

SUFFIX = '.diffop'
INDEX_NAME = 'index.txt'

_index_lock = threading.Lock()


def entry_key(name, version):
    return hashlib.sha256(f"{name}:{version}".encode('utf-8')).hexdigest()


def variables_for(n):
    return {A2.n: A2.variables, B2.n: B2.variables}[n]


class DiskCache(OperatorMemo):
    """
    OperatorMemo persistente: get lee y verifica, put escribe de forma atómica.
    Un archivo corrupto se descarta y el valor se recalcula.
    """

    def __init__(self, directory, version):
        super().__init__()
        self.directory = Path(directory)
        self.version = str(version)
        self.hits = 0
        self.misses = 0

    def path_for(self, name):
        return self.directory / f"{entry_key(name, self.version)}{SUFFIX}"

    def get(self, key):
        found = super().get(key)
        if found is not None:
            return found
        path = self.path_for(key)
        if not path.exists():
            self.misses += 1
            logger.debug("Caché: fallo para %s", key)
            return None
        try:
            op = cache_load(path, self.version)
        except CacheIntegrityError as exc:
            logger.warning("Entrada de caché inválida para %s (%s); se recalcula", key, exc)
            path.unlink(missing_ok=True)
            self.misses += 1
            return None
        self.hits += 1
        logger.info("Caché: acierto para %s", key)
        super().put(key, op)
        return op

    def put(self, key, op):
        super().put(key, op)
        cache_store(self.directory, key, op, self.version)

    def entries(self):
        """(nombre, archivo, bytes) de las entradas registradas en el índice"""
        index = self.directory / INDEX_NAME
        if not index.exists():
            return []
        rows = []
        for line in index.read_text(encoding='utf-8').splitlines():
            version, _, name = line.partition(' ')
            if version != self.version:
                continue
            path = self.path_for(name)
            if path.exists():
                rows.append((name, path.name, path.stat().st_size))
        return rows

    def clear(self):
        removed = 0
        if self.directory.exists():
            for path in self.directory.glob(f"*{SUFFIX}"):
                path.unlink()
                removed += 1
            (self.directory / INDEX_NAME).unlink(missing_ok=True)
        self._store.clear()
        logger.info("Caché vaciada: %s entradas", removed)
        return removed


def cache_store(directory, name, op, version):
    """Escribe la entrada (archivo temporal + rename) y la anota en el índice"""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{entry_key(name, version)}{SUFFIX}"
    tmp = path.with_suffix('.tmp')
    tmp.write_text(dump_diffop(op, variables_for(op.n), version), encoding='utf-8')
    os.replace(tmp, path)
    _record_in_index(directory, f"{version} {name}")
    logger.debug("Caché: guardado %s en %s", name, path.name)
    return path


def _record_in_index(directory, line):
    """Añade la línea al índice sin duplicados, reescribiéndolo ordenado"""
    index = directory / INDEX_NAME
    with _index_lock:
        lines = set(index.read_text(encoding='utf-8').splitlines()) if index.exists() else set()
        if line in lines:
            return
        lines.add(line)
        tmp = index.with_suffix('.tmp')
        tmp.write_text(''.join(f"{entry}\n" for entry in sorted(lines)), encoding='utf-8')
        os.replace(tmp, index)


def cache_load(path, version):
    """Lee y verifica una entrada; CacheIntegrityError si no es válida"""
    return load_diffop(Path(path).read_text(encoding='utf-8'), version)
