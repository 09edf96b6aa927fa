"""
Celery configuration for cmspec project.
"""

import os
from celery import Celery

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')

app = Celery('cmspec')

# Configuración CELERY_* desde settings (eager por defecto)
app.config_from_object('django.conf:settings', namespace='CELERY')

# Carga cli.tasks
app.autodiscover_tasks()
