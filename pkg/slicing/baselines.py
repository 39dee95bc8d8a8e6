"""Statistical slicing policies: FIFO, hard slicing, max-rate and random."""
import numpy as np

from slicing_lab.exceptions import ConfigurationError
from traffic.actions import empty_action

from .decoding import channels_to_request, max_rate_action, random_action

BASELINE_KINDS = ('fifo', 'hard_slicing', 'max_rate', 'random')


def ranked_channels(history_rows, n_c):
    """The n_c channels with the best latest rate over the served users, best first."""
    return [int(c) for c in np.argsort(-history_rows.max(axis=0), kind='stable')[:n_c]]


def _best_for(history_row, channels):
    return max(channels, key=lambda c: (history_row[c], -c))


def fifo_action(history_rows, min_rates, n_c):
    """Earliest request first: give it its best channels until the estimated rate covers m_k.

    Channels left once every request is covered go to the request with the best history on them.
    """
    num_requests, num_channels = history_rows.shape
    action = empty_action(num_requests, num_channels)
    remaining = ranked_channels(history_rows, n_c)
    for k in range(num_requests):
        estimate = 0.0
        while remaining and estimate < min_rates[k]:
            channel = _best_for(history_rows[k], remaining)
            remaining.remove(channel)
            action[k, channel] = 1
            estimate += history_rows[k, channel]
    for channel in remaining:
        action[int(np.argmax(history_rows[:, channel])), channel] = 1
    return action


def largest_remainder(weights, total):
    """Integer split of total proportional to weights; ties go to the lower index."""
    weights = np.asarray(weights, dtype=np.float64)
    if weights.sum() <= 0:
        weights = np.ones_like(weights)
    quotas = total * weights / weights.sum()
    counts = np.floor(quotas).astype(int)
    leftover = total - counts.sum()
    order = np.argsort(-(quotas - counts), kind='stable')
    counts[order[:leftover]] += 1
    return counts


def hard_slicing_action(history_rows, min_rates, n_c):
    """Channel counts proportional to m_k; each request takes its best remaining channels."""
    num_requests, num_channels = history_rows.shape
    action = empty_action(num_requests, num_channels)
    remaining = ranked_channels(history_rows, n_c)
    for k, count in enumerate(largest_remainder(min_rates, len(remaining))):
        for _ in range(count):
            channel = _best_for(history_rows[k], remaining)
            remaining.remove(channel)
            action[k, channel] = 1
    return action


def baseline_action(kind, observation, max_channels, rng=None):
    n_r = observation.n_r
    n_c = channels_to_request(n_r, observation.num_channels, max_channels)
    history_rows = observation.live_history()
    min_rates = observation.serving_info[:n_r, 1]
    if kind == 'fifo':
        return fifo_action(history_rows, min_rates, n_c)
    if kind == 'hard_slicing':
        return hard_slicing_action(history_rows, min_rates, n_c)
    if kind == 'max_rate':
        return max_rate_action(history_rows, n_c)
    if kind == 'random':
        return random_action(n_r, n_c, observation.num_channels, rng)
    raise ConfigurationError(f'unknown baseline {kind!r}')
