"""Slot loop wiring radio, traffic, the slicing agent, the jammer and the ensembles together."""
import logging

import numpy as np

from ensemble.agents import make_attacker, make_victim
from ensemble.classify import classify_network, victim_distances
from jammer.location import optimize_location
from radio.environment import RadioEnvironment, idle_plan
from radio.geometry import random_geometry
from slicing.observation import observe_network
from traffic.actions import plan_row, request_rates
from traffic.history import update_history
from traffic.mobility import move_users
from traffic.network import TrafficModel
from traffic.requests import RequestStatus

from .metrics import TEST, TRAIN, MetricsRecorder

logger = logging.getLogger(__name__)

# independent random streams per concern: default_rng([seed, stream])
STREAMS = {'geometry': 0, 'fading': 1, 'mobility': 2, 'traffic': 3, 'agent': 4, 'jammer': 5, 'location': 6}


def stream(seed, name):
    return np.random.default_rng([seed, STREAMS[name]])


def assignments(row, rates_row):
    """(user, channel, realized rate) for every channel a station used."""
    return [(int(user), channel, float(rates_row[channel])) for channel, user in enumerate(row) if user >= 0]


def place_jammer(scenario, geometry):
    """Configured position, or the Monte Carlo optimum when the scenario asks for it."""
    if not scenario.optimize_jammer:
        return np.asarray(scenario.jammer.position, dtype=float)
    result = optimize_location(geometry, scenario.radio, scenario.location_samples, stream(scenario.seed, 'location'))
    return result.position


class Simulation:

    def __init__(self, scenario):
        self.scenario = scenario
        radio, traffic = scenario.radio, scenario.traffic
        seed = scenario.seed
        self.rngs = {name: stream(seed, name) for name in STREAMS if name != 'location'}
        if scenario.jammer.seed is not None:
            self.rngs['jammer'] = stream(scenario.jammer.seed, 'jammer')
        self.geometry = random_geometry(
            self.rngs['geometry'], radio.num_base_stations, traffic.num_users, radio.cell_radius,
            scenario.station_spacing,
        )
        if scenario.jammer.enabled:
            self.geometry = self.geometry.with_jammer(place_jammer(scenario, self.geometry))
        self.environment = RadioEnvironment(radio, self.geometry, self.rngs['fading'])
        self.traffic = TrafficModel(traffic, radio.num_base_stations, radio.num_channels)
        self.agent = make_victim(
            scenario.agent, traffic, radio.num_base_stations, radio.num_channels, self.rngs['agent'],
            scenario.train_slots, scenario.victim_ensemble,
        )
        self.jammer = None
        if scenario.jammer.enabled:
            self.jammer = make_attacker(
                scenario.jammer, scenario.jammer_ensemble, radio.num_channels, self.rngs['jammer'],
                oracle=self.environment.max_rates,
            )
        self.metrics = MetricsRecorder(scenario.moving_average)

    def phase(self, slot):
        return TRAIN if slot < self.scenario.train_slots else TEST

    def step(self, slot):
        scenario = self.scenario
        num_channels = scenario.radio.num_channels
        self.environment.evolve(self.rngs['fading'])
        self.geometry = move_users(self.geometry, self.rngs['mobility'], scenario.traffic.step_radius)
        self.environment.move(self.geometry)
        _, denied = self.traffic.arrive(self.rngs['traffic'], self.geometry, slot)

        observations = observe_network(self.traffic)
        actions = self.agent.decide(observations, self.rngs['agent'], slot)
        stations = self.traffic.stations
        if scenario.check_invariants:
            for bs, action in zip(stations, actions):
                bs.check(action)
        outstanding = [self.traffic.outstanding(bs.index) for bs in stations]
        self.agent.record(observations, actions, outstanding, slot)

        plan = idle_plan(len(stations), num_channels)
        for bs, action in zip(stations, actions):
            plan[bs.index] = plan_row(action, bs.serving_users(), num_channels)
            bs.remember(action)

        jam_mask = None
        jammer_slot = slot - scenario.train_slots
        if self.jammer is not None and jammer_slot >= 0:
            jam_mask = self.jammer.step(jammer_slot, lambda: self.environment.listen(plan))
        rates = self.environment.rates(plan, jam_mask)

        if self.agent.uses_classes:
            distances = [victim_distances(bs.history, assignments(plan[bs.index], rates[bs.index])) for bs in stations]
            self.agent.observe_class(classify_network(distances))

        reward, successes, failures = 0.0, 0, 0
        for bs, action in zip(stations, actions):
            update_history(bs.history, plan[bs.index], rates[bs.index])
            completed = self.traffic.resolve(bs.index, request_rates(action, rates[bs.index]), slot)
            self.agent.settle(completed)
            for request, value in completed:
                reward += value
                successes += request.status is RequestStatus.SUCCESS
                failures += request.status is RequestStatus.FAILED
        self.agent.after_slot(self.rngs['agent'], slot)

        if scenario.check_invariants:
            for bs in stations:
                bs.check()
        row = {
            'slot': slot, 'phase': self.phase(slot), 'reward': reward, 'successes': successes,
            'failures': failures, 'denials': len(denied), 'serving': int(sum(bs.n_r for bs in stations)),
            'channels_used': int((plan >= 0).sum()),
        }
        if self.jammer is not None:
            row['jammed_channels'] = int(jam_mask.sum()) if jam_mask is not None else 0
        if hasattr(self.agent, 'policy'):
            row['policy'] = self.agent.policy
        self.metrics.add(row)
        return row

    def run(self, start, stop):
        scenario = self.scenario
        for slot in range(start, stop):
            self.step(slot)
            if (slot + 1) % scenario.log_every == 0:
                if scenario.check_invariants:
                    self.traffic.ledger.check_conservation()
                recent = self.metrics.rows[-scenario.log_every:]
                logger.info('slot %d (%s): mean reward %.3f, completion %.3f', slot + 1, self.phase(slot),
                            np.mean([r['reward'] for r in recent]), self.traffic.ledger.completion_ratio())
            if (slot + 1) % scenario.moving_average == 0:
                self.record_snapshots(slot)
        if scenario.check_invariants:
            self.traffic.ledger.check_conservation()

    def record_snapshots(self, slot):
        if hasattr(self.agent, 'snapshot'):
            self.metrics.snapshot(slot, self.phase(slot), {'side': 'victim', **self.agent.snapshot()})
        if self.jammer is not None and hasattr(self.jammer, 'snapshot'):
            self.metrics.snapshot(slot, self.phase(slot), {'side': 'jammer', **self.jammer.snapshot()})

    def freeze(self):
        """Stop all learning; agents still act with their loaded parameters."""
        for side in (self.agent, self.jammer):
            if hasattr(side, 'training'):
                side.training = False

    def train(self):
        self.run(0, self.scenario.train_slots)

    def test(self):
        self.run(self.scenario.train_slots, self.scenario.total_slots)

    def modules(self):
        modules = {f'victim_{name}': module for name, module in self.agent.modules().items()}
        if self.jammer is not None:
            modules.update({f'attacker_{name}': module for name, module in self.jammer.modules().items()})
        return modules
