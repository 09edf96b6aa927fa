from cli import tasks
from cli.serializers import CHECK_CHOICES

from ._base import CmspecCommand


class Command(CmspecCommand):
    help = 'Verifica conmutadores y relaciones de los sistemas A2 y B2'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--check', action='append', dest='checks', choices=CHECK_CHOICES,
                            default=None)

    def handle(self, *args, **options):
        config = self.build_config(options, checks=options.get('checks') or ['all'])
        result = tasks.run_verify_task.apply_async(args=[config]).get()
        for report in result['reports']:
            self.stdout.write(
                f"{report['system']:3} {report['check']:24} {report['status']:13} "
                f"{report['max_residual_ratio']:.3e}"
            )
            if report['status'] != 'pass':
                worst = max(
                    (d for d in report['details'] if 'max_ratio' in d),
                    key=lambda d: d['max_ratio'], default=None,
                )
                if worst:
                    where = worst.get('coefficient_multiindex') or worst.get('label')
                    self.stdout.write(f"    peor coeficiente: {where} (razón {worst['max_ratio']:.3e})")
        failed = [r['check'] for r in result['reports'] if r['status'] != 'pass']
        self.finish('verify', result['exit_code'], config, result['reports'],
                    f"Verificaciones sin pasar: {', '.join(failed)}")
