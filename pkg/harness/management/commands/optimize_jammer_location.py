import numpy as np
from django.core.management.base import BaseCommand

from harness.cli import command_errors, scenario_from_options
from harness.simulation import stream
from jammer.location import GRID_PITCH, optimize_location
from radio.geometry import Geometry, station_layout


class Command(BaseCommand):
    help = 'Grid-search the jammer position minimising the expected jammed sum rate.'

    def add_arguments(self, parser):
        parser.add_argument('--scenario', default='desk')
        parser.add_argument('--set', dest='overrides', action='append', default=[], metavar='PATH=VALUE')
        parser.add_argument('--seed', type=int)
        parser.add_argument('--samples', type=int, help='Monte Carlo samples per candidate')
        parser.add_argument('--pitch', type=float, default=GRID_PITCH, help='grid pitch in km')

    def handle(self, *args, **options):
        with command_errors():
            scenario = scenario_from_options(options)
            radio = scenario.radio
            geometry = Geometry(station_layout(radio.num_base_stations, scenario.station_spacing),
                                np.zeros((0, 2)), None, radio.cell_radius)
            samples = options['samples'] or scenario.location_samples
            result = optimize_location(geometry, radio, samples, stream(scenario.seed, 'location'), options['pitch'])
        x, y = result.position
        self.stdout.write(self.style.SUCCESS(
            f'jammer position ({x:.2f}, {y:.2f}) km, expected jammed sum rate {result.objective:.4f} '
            f'over {len(result.candidates)} candidates'
        ))
