import json

from django.core.management.base import BaseCommand, CommandError

from harness.cli import command_errors
from harness.compare import compare
from harness.models import ExperimentRun


class Command(BaseCommand):
    help = 'Tabulate recorded runs by jammer kind or by ensemble kind.'

    def add_arguments(self, parser):
        parser.add_argument('--table', choices=['jammers', 'ensembles'], default='jammers')
        parser.add_argument('--runs', nargs='*', default=[], help='run ids or run names from the registry')
        parser.add_argument('--summaries', nargs='*', default=[], help='run directories holding summary.json')
        parser.add_argument('--high-power', action='store_true', help='show the 60 dB reference cells')
        parser.add_argument('--csv', help='write the table to this path')

    def handle(self, *args, **options):
        runs = [(run.scenario, run.summary) for run in self.registry_runs(options['runs'])]
        for directory in options['summaries']:
            runs.append(tuple(load(f'{directory}/{name}.json') for name in ('scenario', 'summary')))
        with command_errors():
            table = compare(options['table'], runs, options['high_power'])
        if options['csv']:
            table.to_csv(options['csv'], index=False)
        self.stdout.write(table.to_string(index=False))

    def registry_runs(self, keys):
        runs = []
        for key in keys:
            found = ExperimentRun.objects.filter(id=int(key)) if key.isdigit() else ExperimentRun.objects.filter(name=key)
            if not found.exists():
                raise CommandError(f'no recorded run {key!r}')
            runs.extend(found)
        return runs


def load(path):
    try:
        with open(path) as handle:
            return json.load(handle)
    except FileNotFoundError as exc:
        raise CommandError(f'missing {path}') from exc
