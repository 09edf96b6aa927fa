from cli import tasks
from cli.serializers import TARGET_CHOICES

from ._base import CmspecCommand


class Command(CmspecCommand):
    help = 'Deriva A1..A3 o B1, B2 como polinomios en las integrales básicas'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--target', choices=TARGET_CHOICES, required=True)

    def handle(self, *args, **options):
        target = options['target']
        system = options.get('system') or ('a2' if target.startswith('A') else 'b2')
        options = {**options, 'system': system}
        config = self.build_config(options, target=target, checks=[])
        result = tasks.run_derive_task.apply_async(args=[config]).get()
        report = result['reports'][0]
        if report['derived_text']:
            self.stdout.write(report['derived_text'], ending='')
            self.stdout.write(f"{target} = {report['derived']}")
            self.stdout.write(f"peso: {report['weight']}; ida y vuelta: {report['round_trip']}")
        for item in report['flagged']:
            self.stdout.write(f"término impreso señalado: {item}")
        for diff in report['diff']:
            self.stdout.write(
                f"  {diff['monomial']}: impreso {diff['printed']}, derivado {diff['derived']} "
                f"(peso {diff['weight']})"
            )
        for note in report['notes']:
            self.stdout.write(f"nota: {note}")
        self.finish('derive', result['exit_code'], config, result['reports'],
                    f"{target}: {report['status']}")
