from django.core.management.base import BaseCommand

from harness.cli import add_scenario_arguments, command_errors, output_from_options, scenario_from_options
from harness.runner import evaluate


class Command(BaseCommand):
    help = 'Run only the test phase from a saved checkpoint, with learning switched off.'

    def add_arguments(self, parser):
        add_scenario_arguments(parser)
        parser.add_argument('--checkpoint', required=True, help='checkpoint.npz written by train')
        parser.add_argument('--keep-learning', action='store_true',
                            help='let the agents keep updating during the test phase')

    def handle(self, *args, **options):
        with command_errors():
            scenario = scenario_from_options(options)
            output = output_from_options(options, scenario)
            result = evaluate(scenario, options['checkpoint'], output_dir=output,
                              frozen=not options['keep_learning'])
        test = result.summary['test']
        self.stdout.write(self.style.SUCCESS(
            f'run {result.run.id}: test reward {test["average_reward"]:.3f}, '
            f'completion {100 * test["completion_ratio"]:.2f}%'
        ))
