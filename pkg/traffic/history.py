"""Transmission-rate history H^b: one bounded queue of recent rates per (user, channel)."""
import numpy as np


class RateHistory:

    def __init__(self, num_users, num_channels, depth=5):
        self.depth = depth
        self.values = np.zeros((num_users, num_channels, depth))
        self.counts = np.zeros((num_users, num_channels), dtype=int)

    def append(self, user, channel, rate):
        count = self.counts[user, channel]
        if count < self.depth:
            self.values[user, channel, count] = rate
            self.counts[user, channel] = count + 1
        else:
            row = self.values[user, channel]
            row[:-1] = row[1:]
            row[-1] = rate

    def queue(self, user, channel):
        """Entries oldest first."""
        return self.values[user, channel, :self.counts[user, channel]].copy()

    def latest(self):
        """(N_u, N) most recent rates; 0 where nothing was recorded."""
        last = np.maximum(self.counts - 1, 0)
        picked = np.take_along_axis(self.values, last[:, :, None], axis=2)[:, :, 0]
        return np.where(self.counts > 0, picked, 0.0)


def update_history(history, plan_row, rates_row):
    """Append r_c^{b,u} for every channel the station used this slot; others untouched."""
    for channel, user in enumerate(plan_row):
        if user >= 0:
            history.append(int(user), channel, float(rates_row[channel]))
    return history
