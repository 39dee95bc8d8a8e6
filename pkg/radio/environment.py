"""Per-channel rates with inter-cell and jamming interference, and the jammer's listening."""
import logging

import numpy as np

from slicing_lab.exceptions import ShapeMismatchError

from .fading import FadingField, evolve_fading
from .propagation import jammer_user_loss, station_jammer_loss, station_user_loss

logger = logging.getLogger(__name__)

IDLE = -1


def idle_plan(num_stations, num_channels):
    """Transmission plan: plan[b, c] is the user served by b on c, or IDLE."""
    return np.full((num_stations, num_channels), IDLE, dtype=int)


class RadioEnvironment:
    """Fading state plus geometry; all powers in units of the noise power."""

    def __init__(self, params, geometry, rng):
        self.params = params
        self.geometry = geometry
        self.fading = FadingField.stationary(
            rng, geometry.num_stations, geometry.num_users, params.num_channels, params.rho,
        )
        self._refresh_losses()

    def _refresh_losses(self):
        self.loss_bu = station_user_loss(self.geometry, self.params)
        if self.geometry.jammer_position is not None:
            self.loss_ju = jammer_user_loss(self.geometry, self.params)
            self.loss_bj = station_jammer_loss(self.geometry, self.params)
        else:
            self.loss_ju = np.zeros(self.geometry.num_users)
            self.loss_bj = np.zeros(self.geometry.num_stations)

    def evolve(self, rng):
        self.fading = evolve_fading(self.fading, rng)

    def move(self, geometry):
        self.geometry = geometry
        self._refresh_losses()

    def received_power(self, plan):
        """power[b', b, c]: power from station b' at the user that b serves on c."""
        num_stations, num_channels = plan.shape
        users = np.where(plan >= 0, plan, 0)
        channels = np.arange(num_channels)[None, :]
        gain = np.abs(self.fading.bs_ue[:, users, channels]) ** 2
        return self.params.bs_power * self.loss_bu[:, users] * gain

    def jamming_power(self, plan, jam_mask):
        """N^{b,J}_c at the user b serves on c; zero on channels outside the jam set."""
        users = np.where(plan >= 0, plan, 0)
        channels = np.arange(plan.shape[1])[None, :]
        gain = np.abs(self.fading.jam_ue[users, channels]) ** 2
        return self.params.jam_power * self.loss_ju[users] * gain * jam_mask[None, :]

    def rates(self, plan, jam_mask=None):
        """(N_B, N) rates r_c^{b,u} in bits/symbol for every active (b, c); zero elsewhere."""
        plan = np.asarray(plan)
        expected = (self.geometry.num_stations, self.params.num_channels)
        if plan.shape != expected:
            raise ShapeMismatchError(f'plan shape {plan.shape} != {expected}')
        active = plan >= 0
        power = self.received_power(plan)
        stations = np.arange(plan.shape[0])
        signal = power[stations, stations, :]
        interference = (active[:, None, :] * power).sum(axis=0) - active * signal
        if jam_mask is not None and self.geometry.jammer_position is not None:
            interference = interference + self.jamming_power(plan, np.asarray(jam_mask, dtype=float))
        rate = np.log2(1.0 + signal / (interference + 1.0))
        return np.where(active, rate, 0.0)

    def channel_rate(self, b, u, c, plan, jam_mask=None):
        plan = np.array(plan, copy=True)
        plan[b, c] = u
        return float(self.rates(plan, jam_mask)[b, c])

    def listen(self, plan):
        """N^listen_c = sum_b 1_c^b P_B L^{b,J} |h_c^{b,J}|^2 + sigma^2."""
        active = np.asarray(plan) >= 0
        power = self.params.bs_power * self.loss_bj[:, None] * np.abs(self.fading.bs_jam) ** 2
        return (active * power).sum(axis=0) + 1.0

    def max_rates(self):
        """Interference-free r^max_c = max_{b,u} log2(1 + P_B L^{b,u} |h|^2); oracle for the max-rate jammer."""
        snr = self.params.bs_power * self.loss_bu[:, :, None] * np.abs(self.fading.bs_ue) ** 2
        return np.log2(1.0 + snr).max(axis=(0, 1))
