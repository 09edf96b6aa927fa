"""
Base común de las órdenes de cmspec: argumentos compartidos, validación de la
configuración y traducción de resultados a códigos de salida.
"""

import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from cli import services
from cli.serializers import RunConfigSerializer

logger = logging.getLogger('cli')


class UsageError(CommandError):
    """Argumentos o configuración inválidos (código 64)"""

    def __init__(self, message):
        super().__init__(message, returncode=services.EXIT_USAGE)


class CmspecCommand(BaseCommand):
    requires_system_checks = []
    requires_migrations_checks = False
    # Los contextos se exigen distintos de a pares sólo donde interviene el oráculo
    needs_oracle = True

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)

        def usage_error(message):
            raise UsageError(f"{subcommand}: {message}")

        parser.error = usage_error
        return parser

    def add_arguments(self, parser):
        parser.add_argument('--system', choices=['a2', 'b2', 'both'], default=None)
        parser.add_argument('--precision-bits', type=int, dest='precision_bits',
                            default=settings.CMSPEC_PRECISION_BITS)
        parser.add_argument('--trials', type=int, default=settings.CMSPEC_TRIALS)
        parser.add_argument('--seed', type=int, default=settings.CMSPEC_SEED)
        parser.add_argument('--context', action='append', dest='contexts', default=None,
                            help='"g2,g3" en racionales p/q; repetible')
        parser.add_argument('--cache-dir', dest='cache_dir', default=str(settings.CMSPEC_CACHE_DIR))
        parser.add_argument('--no-cache', action='store_true', dest='no_cache')
        parser.add_argument('--report', dest='report_path', default=None)
        parser.add_argument('--threads', type=int, default=settings.CMSPEC_THREADS)

    def build_config(self, options, **extra):
        """Valida la configuración con RunConfigSerializer; UsageError si no pasa"""
        data = {
            'system': options.get('system') or 'both',
            'precision_bits': options['precision_bits'],
            'trials': options['trials'],
            'seed': options['seed'],
            'contexts': options.get('contexts') or list(settings.CMSPEC_CONTEXTS),
            'cache_dir': None if options.get('no_cache') else options.get('cache_dir'),
            'report_path': options.get('report_path'),
            'threads': options['threads'],
            **extra,
        }
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            errors = '; '.join(
                f"{field}: {' '.join(str(m) for m in messages)}"
                for field, messages in serializer.errors.items()
            )
            raise UsageError(f"Configuración inválida: {errors}")
        config = dict(serializer.validated_data)
        if self.needs_oracle and len(set(config['contexts'])) < 2:
            raise UsageError("El oráculo necesita al menos dos contextos (g2, g3) distintos")
        return config

    def finish(self, command, exit_code, config, reports, summary):
        """Escribe el informe si se pidió y termina con el código de salida"""
        if config.get('report_path'):
            services.write_run_report(config['report_path'], command, exit_code, config, reports)
            logger.info("Informe escrito en %s", config['report_path'])
        if exit_code != services.EXIT_PASS:
            raise CommandError(summary, returncode=exit_code)
