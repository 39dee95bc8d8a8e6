from django.core.management.base import BaseCommand

from harness.cli import add_scenario_arguments, command_errors, output_from_options, scenario_from_options
from harness.runner import run_experiment


class Command(BaseCommand):
    help = 'Run the training phase and the test phase of one scenario and record the run.'

    def add_arguments(self, parser):
        add_scenario_arguments(parser)

    def handle(self, *args, **options):
        with command_errors():
            scenario = scenario_from_options(options)
            output = output_from_options(options, scenario)
            result = run_experiment(scenario, output_dir=output)
        test = result.summary['test']
        self.stdout.write(self.style.SUCCESS(
            f'run {result.run.id}: test reward {test["average_reward"]:.3f}, '
            f'completion {100 * test["completion_ratio"]:.2f}% -> {output}'
        ))
