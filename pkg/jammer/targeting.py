"""Listening-based targets: beta estimation, interpolation, reward and top-k selection."""
import logging
from collections import deque

import numpy as np

logger = logging.getLogger(__name__)


def interpolate_target(previous, following, beta):
    """N_hat = (beta N(t-1) + N(t+1)) / (beta + 1)."""
    previous = np.asarray(previous, dtype=np.float64)
    following = np.asarray(following, dtype=np.float64)
    return (beta * previous + following) / (beta + 1.0)


def listen_difference(previous, following):
    """d_c = |N_c(t+1) - N_c(t-1)|."""
    return np.abs(np.asarray(following, dtype=np.float64) - np.asarray(previous, dtype=np.float64))


def jam_reward(action, target):
    """R_J = -sum_c (A_c - N_hat_c / max N_hat)^2; silence on air skips the normalisation."""
    action = np.asarray(action, dtype=np.float64)
    target = np.asarray(target, dtype=np.float64)
    peak = target.max()
    normalised = target / peak if peak > 0 else target
    return -float(np.sum((action - normalised) ** 2))


def top_channels(scores, count):
    """Indices of the count largest scores; ties to the lower index."""
    return np.sort(np.argsort(-np.asarray(scores), kind='stable')[:count])


def channel_mask(channels, num_channels):
    mask = np.zeros(num_channels)
    mask[np.asarray(channels, dtype=int)] = 1.0
    return mask


class BetaEstimator:
    """beta = max(2 |T'| sum d(T'') / (|T''| sum d(T')) - 1, 0).

    T' keeps a running total and count of listen differences from slots without
    jamming; T'' is a sliding window over the most recent jamming phases.
    """

    def __init__(self, window=50, initial=1.0):
        self.listen_total = 0.0
        self.listen_count = 0
        self.jam_sums = deque(maxlen=window)
        self.beta = float(initial)

    def add_listen(self, difference):
        self.listen_total += float(np.sum(difference))
        self.listen_count += 1

    def add_jam(self, difference):
        self.jam_sums.append(float(np.sum(difference)))
        return self.update()

    def update(self):
        denominator = len(self.jam_sums) * self.listen_total
        if not self.jam_sums or denominator <= 0:
            return self.beta
        numerator = 2.0 * self.listen_count * sum(self.jam_sums)
        self.beta = max(numerator / denominator - 1.0, 0.0)
        return self.beta


def update_beta(estimator, jam_differences, listen_differences):
    for difference in listen_differences:
        estimator.add_listen(difference)
    for difference in jam_differences:
        estimator.jam_sums.append(float(np.sum(difference)))
    return estimator.update()
