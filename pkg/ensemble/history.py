"""Utility history H: an E x L grid of bounded queues of recorded utilities."""
from collections import deque

import numpy as np

SEED_SCALE = 1e-3


class UtilityHistory:
    """Cells without a recorded utility report the matrix-wide running mean plus a
    small random seed, so the first games are not degenerate ties."""

    def __init__(self, num_policies, num_classes, capacity=20, rng=None):
        rng = np.random.default_rng() if rng is None else rng
        self.capacity = capacity
        self.queues = [[deque(maxlen=capacity) for _ in range(num_classes)] for _ in range(num_policies)]
        self.seeds = rng.uniform(0.0, SEED_SCALE, (num_policies, num_classes))
        self.total = 0.0
        self.count = 0

    @property
    def shape(self):
        return self.seeds.shape

    @property
    def running_mean(self):
        return self.total / self.count if self.count else 0.0

    def append(self, policy, label, utility):
        self.queues[policy][label].append(float(utility))
        self.total += float(utility)
        self.count += 1

    def lengths(self):
        return np.array([[len(queue) for queue in row] for row in self.queues])

    def averages(self):
        means = np.empty(self.shape)
        for e, row in enumerate(self.queues):
            for l, queue in enumerate(row):
                means[e, l] = np.mean(queue) if queue else self.running_mean + self.seeds[e, l]
        return means
