from dataclasses import dataclass

from slicing_lab.exceptions import ConfigurationError

from .fading import jakes_correlation


@dataclass(frozen=True)
class RadioParams:
    """Physical-layer constants. Powers are linear ratios to the noise power (sigma^2 = 1)."""

    num_channels: int = 16
    num_base_stations: int = 5
    tx_power_to_noise: float = 6.3
    jam_power_to_noise: float = 6.3
    path_loss_exponent: float = -2.0
    bs_height: float = 50.0          # m
    jammer_height: float = 1.5       # m
    doppler: float = 1.0             # Hz
    slot_duration: float = 0.02      # s
    cell_radius: float = 2.5         # km
    link_budget: float = 1.0         # g, multiplies every P*L term

    def __post_init__(self):
        if self.num_channels < 1:
            raise ConfigurationError('num_channels must be >= 1')
        if self.num_base_stations < 1:
            raise ConfigurationError('num_base_stations must be >= 1')
        if self.path_loss_exponent >= 0:
            raise ConfigurationError('path_loss_exponent must be negative')
        if min(self.tx_power_to_noise, self.jam_power_to_noise, self.link_budget) <= 0:
            raise ConfigurationError('powers and link budget must be positive')
        if self.bs_height < 0 or self.jammer_height < 0:
            raise ConfigurationError('heights must be >= 0')
        if self.cell_radius <= 0:
            raise ConfigurationError('cell_radius must be positive')
        rho = self.rho
        if not 0 < rho < 1:
            raise ConfigurationError(f'fading correlation {rho} outside (0, 1)')

    @property
    def rho(self):
        return jakes_correlation(self.doppler, self.slot_duration)

    @property
    def bs_power(self):
        return self.link_budget * self.tx_power_to_noise

    @property
    def jam_power(self):
        return self.link_budget * self.jam_power_to_noise
