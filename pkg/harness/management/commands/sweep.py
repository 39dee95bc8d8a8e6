import json

from django.core.management.base import BaseCommand

from harness.cli import command_errors
from harness.runner import sweep
from harness.scenario import apply_overrides, scenario_path


class Command(BaseCommand):
    help = 'Launch independent seeded runs in parallel, optionally across values of one scenario field.'

    def add_arguments(self, parser):
        parser.add_argument('--scenario', default='desk')
        parser.add_argument('--set', dest='overrides', action='append', default=[], metavar='PATH=VALUE')
        parser.add_argument('--seeds', type=int, nargs='+', default=[0, 1, 2])
        parser.add_argument('--axis', help='dotted path varied across runs, e.g. jammer.kind')
        parser.add_argument('--values', nargs='+', default=[], help='values for --axis (JSON or plain strings)')
        parser.add_argument('--workers', type=int)

    def handle(self, *args, **options):
        values = [parse(value) for value in options['values']]
        with command_errors():
            with open(scenario_path(options['scenario'])) as handle:
                document = apply_overrides(json.load(handle), options['overrides'])
            runs = sweep(document, options['seeds'], options['axis'], values, options['workers'])
        for run in runs:
            test = run.summary['test']
            self.stdout.write(f'{run.id}\t{run.name}\tseed {run.seed}\t{run.jammer_kind}\t'
                              f'{test["average_reward"]:.3f}\t{100 * test["completion_ratio"]:.2f}%')


def parse(value):
    try:
        return json.loads(value)
    except json.JSONDecodeError:
        return value
