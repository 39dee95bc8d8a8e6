"""Shared option handling for the management commands."""
import contextlib

from django.core.management.base import CommandError

from slicing_lab.exceptions import ConfigurationError, SlicingLabError

from .runner import run_directory
from .scenario import load_scenario


def add_scenario_arguments(parser):
    parser.add_argument('--scenario', default='desk', help='scenario name under scenarios/ or a JSON path')
    parser.add_argument('--set', dest='overrides', action='append', default=[], metavar='PATH=VALUE',
                        help='override a scenario field by dotted path, e.g. radio.doppler=2')
    parser.add_argument('--seed', type=int, help='shorthand for --set seed=N')
    parser.add_argument('--output', help='artefact directory (default: a fresh folder under SLICING_OUTPUT_DIR)')


def scenario_from_options(options):
    overrides = list(options['overrides'])
    if options.get('seed') is not None:
        overrides.append(f'seed={options["seed"]}')
    return load_scenario(options['scenario'], overrides)


def output_from_options(options, scenario):
    return options.get('output') or run_directory(scenario.name, scenario.seed)


@contextlib.contextmanager
def command_errors():
    """Library failures become CommandError, which exits non-zero."""
    try:
        yield
    except ConfigurationError as exc:
        details = f': {exc.errors}' if exc.errors else ''
        raise CommandError(f'{exc}{details}') from exc
    except SlicingLabError as exc:
        raise CommandError(f'{type(exc).__name__}: {exc}') from exc
