"""Per-station observation O_b and its serializations for the actor and critic.

Serialization order is station index, then request slot, then channel; absent
requests are zero rows.
"""
from dataclasses import dataclass

import numpy as np

from traffic.requests import INFO_SIZE


@dataclass
class StationObservation:
    station: int
    users: list                 # U_b, serving order
    last_action: np.ndarray     # (N_r, N) A_b(t-1), padded
    history: np.ndarray         # (N_r, N) latest H^b[U_b, C], padded
    serving_info: np.ndarray    # (N_r, 4)
    queue_info: np.ndarray      # (N_q, 4)

    @property
    def n_r(self):
        return len(self.users)

    @property
    def num_channels(self):
        return self.history.shape[1]

    @property
    def max_serving(self):
        return self.history.shape[0]

    def encoder_inputs(self):
        """(n_r, 2N + 4): last action row, user's history row, request info."""
        n = self.n_r
        return np.hstack([self.last_action[:n], self.history[:n], self.serving_info[:n]])

    def decoder_inputs(self):
        """(N, 5 N_r): history of every served user on c, then all serving request info."""
        info = np.broadcast_to(self.serving_info.ravel(), (self.num_channels, self.serving_info.size))
        return np.hstack([self.history.T, info])

    def queue_vector(self):
        return self.queue_info.ravel()

    def flat(self):
        return np.concatenate([
            self.last_action.ravel(), self.history.ravel(), self.serving_info.ravel(), self.queue_info.ravel(),
        ])

    def live_history(self):
        return self.history[:self.n_r]


def flat_size(num_channels, max_serving, max_queue):
    return 2 * max_serving * num_channels + INFO_SIZE * (max_serving + max_queue)


def observe_station(bs):
    params = bs.params
    num_channels = bs.num_channels
    users = bs.serving_users()
    last_action = np.zeros((params.max_serving, num_channels))
    last_action[:len(users)] = bs.last_action()
    history = np.zeros((params.max_serving, num_channels))
    if users:
        history[:len(users)] = bs.history.latest()[users]
    serving_info = np.zeros((params.max_serving, INFO_SIZE))
    for k, request in enumerate(bs.serving):
        serving_info[k] = request.info()
    queue_info = np.zeros((params.max_queue, INFO_SIZE))
    for k, request in enumerate(bs.queue):
        queue_info[k] = request.info()
    return StationObservation(bs.index, users, last_action, history, serving_info, queue_info)


def observe_network(model):
    return [observe_station(bs) for bs in model.stations]


def critic_input(observations):
    """Global O: every station's flattened O_b in station order."""
    return np.concatenate([obs.flat() for obs in observations])
