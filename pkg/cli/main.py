"""
Punto de entrada de cmspec: cmspec <verify|derive|selftest|cache> [opciones]
"""

import os
import sys

COMMANDS = ('verify', 'derive', 'selftest', 'cache')
EXIT_USAGE = 64


def main(argv=None):
    """Ejecuta una orden y devuelve su código de salida"""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    import django
    from django.core.management import call_command
    from django.core.management.base import CommandError

    django.setup()
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in COMMANDS:
        sys.stderr.write(f"uso: cmspec <{'|'.join(COMMANDS)}> [opciones]\n")
        return EXIT_USAGE
    try:
        call_command(argv[0], *argv[1:])
    except CommandError as exc:
        sys.stderr.write(f"{exc}\n")
        return exc.returncode
    except SystemExit as exc:
        return exc.code or 0
    return 0
