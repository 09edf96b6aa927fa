import pytest

from numeric_eval import EllipticContext

# Precisión baja para que la suite rápida corra en segundos
TEST_BITS = 128


@pytest.fixture
def contexts():
    """Lemniscático y genérico, a 128 bits"""
    return [EllipticContext('4', '0', TEST_BITS), EllipticContext('7/3', '5/7', TEST_BITS)]


@pytest.fixture
def three_contexts():
    return [
        EllipticContext('4', '0', TEST_BITS),
        EllipticContext('0', '4', TEST_BITS),
        EllipticContext('7/3', '5/7', TEST_BITS),
    ]


@pytest.fixture(autouse=True)
def quiet_timings(settings, tmp_path):
    """Informes reproducibles y caché aislada por prueba"""
    settings.CMSPEC_REPORT_TIMINGS = False
    settings.CMSPEC_CACHE_DIR = tmp_path / 'cache'
    settings.CELERY_TASK_ALWAYS_EAGER = True
    return settings
