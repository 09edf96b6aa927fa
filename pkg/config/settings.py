"""
Django settings for cmspec project.
"""

from pathlib import Path
from decouple import Csv, config

# Build paths inside the project
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='cmspec-local-only')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='localhost', cast=Csv())

# Application definition
INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',

    # Third-party apps
    'rest_framework',

    # Local apps
    'cli',
]

# Sin base de datos: todo el estado vive en la caché de operadores
DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'es-mx'
TIME_ZONE = 'America/Mexico_City'
USE_I18N = True
USE_TZ = True

# Django REST Framework (sólo serializers y JSONRenderer)
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
}

# ============================================
# CMSPEC: valores por defecto de la línea de órdenes
# ============================================

CMSPEC_PRECISION_BITS = config('CMSPEC_PRECISION_BITS', default=256, cast=int)
CMSPEC_TRIALS = config('CMSPEC_TRIALS', default=8, cast=int)
CMSPEC_SEED = config('CMSPEC_SEED', default=42, cast=int)
CMSPEC_THREADS = config('CMSPEC_THREADS', default=1, cast=int)
# Contextos (g2, g3) separados por ';', cada uno "p/q,p/q"
CMSPEC_CONTEXTS = config('CMSPEC_CONTEXTS', default='4/1,0/1;0/1,4/1;7/3,5/7',
                         cast=Csv(delimiter=';'))
CMSPEC_CACHE_DIR = config('CMSPEC_CACHE_DIR', default=str(BASE_DIR / '.cmspec-cache'), cast=Path)
CMSPEC_CACHE_VERSION = config('CMSPEC_CACHE_VERSION', default='1')
CMSPEC_REPORT_TIMINGS = config('CMSPEC_REPORT_TIMINGS', default=True, cast=bool)
CMSPEC_LOG_LEVEL = config('CMSPEC_LOG_LEVEL', default='INFO')

# Celery Configuration
CELERY_BROKER_URL = config('CELERY_BROKER_URL', default='redis://localhost:6379/0')
CELERY_RESULT_BACKEND = config('CELERY_RESULT_BACKEND', default='redis://localhost:6379/0')
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = TIME_ZONE
CELERY_ENABLE_UTC = True
# En proceso por defecto; False + Redis para un worker aparte
CELERY_TASK_ALWAYS_EAGER = config('CELERY_TASK_ALWAYS_EAGER', default=True, cast=bool)
CELERY_TASK_EAGER_PROPAGATES = True

# Logging Configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
            'stream': 'ext://sys.stderr',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        name: {
            'handlers': ['console'],
            'level': CMSPEC_LOG_LEVEL,
            'propagate': False,
        }
        for name in ('cli', 'relations', 'diff_op', 'numeric_eval', 'cm_catalog', 'elliptic_ring')
    },
}
