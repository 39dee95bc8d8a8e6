"""All base stations of one MVNO plus user cooldowns and the reward ledger."""
import numpy as np

from .arrivals import arrivals
from .ledger import RewardLedger
from .station import BaseStationState, step_requests


class TrafficModel:

    def __init__(self, params, num_stations, num_channels):
        self.params = params
        self.num_channels = num_channels
        self.stations = [BaseStationState(b, params, num_channels) for b in range(num_stations)]
        self.ready_at = np.zeros(params.num_users, dtype=int)
        self.active = np.zeros(params.num_users, dtype=bool)
        self.ledger = RewardLedger()
        self._next_id = 0

    def next_id(self):
        self._next_id += 1
        return self._next_id

    def arrive(self, rng, geometry, slot):
        admitted, denied = arrivals(rng, self, geometry, slot)
        for request in denied:
            self.ledger.record(request)
        return admitted, denied

    def outstanding(self, station=None):
        """Ids of serving and queued requests (K_b, or K over all stations)."""
        stations = self.stations if station is None else [self.stations[station]]
        return {request.id for bs in stations for request in bs.serving + bs.queue}

    def resolve(self, station, realized_rates, slot):
        bs, completed = step_requests(self.stations[station], realized_rates, slot)
        for request, _ in completed:
            self.active[request.user] = False
            self.ready_at[request.user] = slot + 1 + self.params.cooldown
            self.ledger.record(request)
        return completed
