"""Opponent classes for the utility history, plus the action-correlation count."""
import numpy as np

from slicing_lab.exceptions import ShapeMismatchError

VICTIM_CLASSES = 5
JAMMER_CLASSES = 2


def candidate_rates(queue):
    """Newest, 2nd ... 4th newest entry and the minimum; short queues pad with the minimum."""
    queue = np.asarray(queue, dtype=np.float64)
    if queue.size == 0:
        return np.zeros(VICTIM_CLASSES)
    lowest = queue.min()
    recent = [queue[-k] if k <= queue.size else lowest for k in range(1, VICTIM_CLASSES)]
    return np.array(recent + [lowest])


def victim_distances(history, assignments):
    """d_o = sum over (user, channel, realized rate) of (candidate_o - rate)^2."""
    distances = np.zeros(VICTIM_CLASSES)
    for user, channel, rate in assignments:
        distances += (candidate_rates(history.queue(user, channel)) - rate) ** 2
    return distances


def classify_victim(history, assignments):
    """Class index 0..4 of the closest candidate; ties go to the lower index."""
    return int(np.argmin(victim_distances(history, assignments)))


def classify_network(distances):
    """One class for the whole operator: station distances summed before the argmin."""
    return int(np.argmin(np.sum(distances, axis=0)))


class RunningMean:

    def __init__(self):
        self.total = 0.0
        self.count = 0

    @property
    def value(self):
        return self.total / self.count if self.count else None

    def update(self, x):
        self.total += float(x)
        self.count += 1
        return self.value


def classify_jammer(difference, mean):
    """0 when the summed listen difference falls below the running mean, else 1."""
    return 0 if float(np.sum(difference)) < mean else 1


def correlation(first, second):
    """Number of positions where both binary actions are 1."""
    first = np.asarray(first).ravel()
    second = np.asarray(second).ravel()
    if first.shape != second.shape:
        raise ShapeMismatchError(f'actions of length {first.size} and {second.size}')
    return int(np.sum((first == 1) & (second == 1)))


def correlation_matrix(actions):
    return np.array([[correlation(a, b) for b in actions] for a in actions])
