import numpy as np

from slicing.baselines import baseline_action, fifo_action, hard_slicing_action, largest_remainder
from traffic.actions import check_action

# === Proportional split ===

def test_largest_remainder_even_split():
    assert largest_remainder([1.0, 1.0], 4).tolist() == [2, 2]

def test_largest_remainder_sums_to_total():
    counts = largest_remainder([0.8, 0.95, 0.9], 8)
    assert counts.sum() == 8
    assert counts.tolist() == [3, 3, 2] or counts.tolist() == [2, 3, 3]

# === FIFO and hard slicing ===

def test_single_request_gets_every_channel():
    history = np.array([[0.4, 1.2, 0.1, 0.9, 0.3, 0.0]])
    fifo = fifo_action(history, [1.0], 4)
    hard = hard_slicing_action(history, [1.0], 4)
    assert np.array_equal(fifo, hard)
    assert fifo.sum() == 4
    assert fifo[0].tolist() == [1, 1, 0, 1, 1, 0]

def test_hard_slicing_two_equal_requests():
    history = np.array([[1.0, 0.9, 0.8, 0.7, 0.1], [0.2, 0.3, 0.9, 1.5, 0.1]])
    action = hard_slicing_action(history, [1.0, 1.0], 4)
    assert action.sum(axis=1).tolist() == [2, 2]
    check_action(action, 2, 5, 4)

def test_fifo_serves_earliest_request_first():
    history = np.array([[0.5, 0.5, 0.5, 0.5], [2.0, 2.0, 2.0, 2.0]])
    action = fifo_action(history, [1.0, 1.0], 3)
    assert action[0].sum() == 2
    assert action[1].sum() == 1

def test_every_baseline_emits_valid_actions(observation_factory):
    rng = np.random.default_rng(3)
    for kind in ('fifo', 'hard_slicing', 'max_rate', 'random'):
        for n_r in (1, 2, 4):
            obs = observation_factory(rng, n_r=n_r, num_channels=16, max_serving=4, max_queue=2)
            action = baseline_action(kind, obs, 8, rng)
            check_action(action, n_r, 16, 8)
            assert action.sum() == 8
