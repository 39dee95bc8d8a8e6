"""Turning channel scores into ActionMatrix assignments."""
import numpy as np

from traffic.actions import empty_action


def channels_to_request(num_requests, num_channels, max_channels):
    """n_c: every busy station asks for min(N_c, N) channels; idle stations transmit nothing."""
    return min(max_channels, num_channels) if num_requests >= 1 else 0


def decode_action(scores, n_c):
    """Keep the n_c channels whose best score is largest; give each to its argmax request.

    Ties resolve to the lowest index, both across channels and across requests.
    """
    scores = np.asarray(scores, dtype=np.float64)
    num_requests, num_channels = scores.shape
    action = empty_action(num_requests, num_channels)
    if num_requests == 0 or n_c <= 0:
        return action
    best = scores.max(axis=0)
    winners = scores.argmax(axis=0)
    chosen = np.argsort(-best, kind='stable')[:n_c]
    action[winners[chosen], chosen] = 1
    return action


def max_rate_action(history_rows, n_c):
    return decode_action(history_rows, n_c)


def random_action(num_requests, n_c, num_channels, rng):
    action = empty_action(num_requests, num_channels)
    if num_requests == 0 or n_c <= 0:
        return action
    channels = rng.choice(num_channels, size=n_c, replace=False)
    action[rng.integers(num_requests, size=n_c), channels] = 1
    return action


def log_probability(probs, action):
    """Sum of log P^c[k] over the assigned (k, c) entries."""
    mask = np.asarray(action) == 1
    return float(np.log(np.asarray(probs)[mask]).sum())
