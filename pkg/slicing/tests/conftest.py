import numpy as np
import pytest

from slicing.observation import StationObservation


def build_observation(rng, n_r=2, num_channels=3, max_serving=2, max_queue=1, station=0):
    last_action = np.zeros((max_serving, num_channels))
    history = np.zeros((max_serving, num_channels))
    serving_info = np.zeros((max_serving, 4))
    queue_info = rng.uniform(0.5, 3.0, (max_queue, 4))
    for k in range(n_r):
        last_action[k, rng.integers(num_channels)] = 1.0
        history[k] = rng.uniform(0.0, 2.0, num_channels)
        serving_info[k] = rng.uniform(0.5, 3.0, 4)
    return StationObservation(station, list(range(n_r)), last_action, history, serving_info, queue_info)


@pytest.fixture
def observation_factory():
    return build_observation
