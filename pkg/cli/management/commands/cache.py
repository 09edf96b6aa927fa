from django.conf import settings

from cli import tasks
from cli.cache import DiskCache

from ._base import CmspecCommand, UsageError


class Command(CmspecCommand):
    help = 'Lista, vacía o precalcula la caché de operadores'
    needs_oracle = False

    def add_arguments(self, parser):
        parser.add_argument('action', choices=['list', 'clear', 'warm'])
        super().add_arguments(parser)

    def handle(self, *args, **options):
        if options.get('no_cache'):
            raise UsageError("cache: --no-cache no tiene sentido aquí")
        config = self.build_config(options, checks=[])
        cache = DiskCache(config['cache_dir'], settings.CMSPEC_CACHE_VERSION)
        action = options['action']
        if action == 'list':
            for name, filename, size in cache.entries():
                self.stdout.write(f"{name:40} {size:>10} {filename}")
        elif action == 'clear':
            removed = cache.clear()
            self.stdout.write(f"Se eliminaron {removed} entradas")
        else:
            self.stdout.write(tasks.warm_cache_task.apply_async(args=[config]).get())
