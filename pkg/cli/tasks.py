"""
Tareas de Celery para la aplicación cli

Cada tarea recibe la configuración validada (dict JSON) y devuelve datos
serializables. Con CELERY_TASK_ALWAYS_EAGER se ejecutan en el mismo proceso.
"""

import logging

from celery import shared_task

from . import services

logger = logging.getLogger(__name__)


@shared_task
def run_verify_task(config):
    """
    Ejecuta las verificaciones seleccionadas
    Devuelve el código de salida y los informes serializados
    """
    exit_code, reports = services.run_verify(config)
    logger.info("Verificación terminada: %s informes, código %s", len(reports), exit_code)
    return {'exit_code': exit_code, 'reports': reports}


@shared_task
def run_derive_task(config):
    """
    Deriva un coeficiente y lo compara con la fórmula impresa
    """
    exit_code, report = services.run_derive(config)
    return {'exit_code': exit_code, 'reports': [report]}


@shared_task
def run_selftest_task(config):
    """Suites de invariantes del motor"""
    exit_code, results = services.run_selftest(config)
    return {'exit_code': exit_code, 'reports': results}


@shared_task
def warm_cache_task(config):
    """
    Precalcula productos de integrales en la caché de disco
    """
    keys = services.warm_cache(config)
    return f"Se precalcularon {len(keys)} productos: {', '.join(keys)}"
