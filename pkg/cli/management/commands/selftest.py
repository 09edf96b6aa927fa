from cli import tasks

from ._base import CmspecCommand


class Command(CmspecCommand):
    help = 'Ejecuta las suites de invariantes del motor'
    needs_oracle = False

    def handle(self, *args, **options):
        config = self.build_config(options, checks=[])
        result = tasks.run_selftest_task.apply_async(args=[config]).get()
        for suite in result['reports']:
            mark = 'ok' if suite['passed'] else 'FALLA'
            line = f"{suite['suite']:14} {mark:6} {suite['checks']} comprobaciones"
            if suite['message']:
                line += f" ({suite['message']})"
            self.stdout.write(line)
        self.finish('selftest', result['exit_code'], config, result['reports'],
                    'Alguna suite de invariantes falló')
