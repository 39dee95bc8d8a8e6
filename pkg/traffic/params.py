from dataclasses import dataclass

from slicing_lab.exceptions import ConfigurationError


@dataclass(frozen=True)
class TrafficParams:
    num_users: int = 30
    max_channels: int = 8            # N_c
    max_serving: int = 4             # N_r
    max_queue: int = 2               # N_q
    cooldown: int = 2                # T_r
    payload_range: tuple = (1.0, 2.0)
    min_rate_range: tuple = (0.8, 1.0)
    lifetime_slack: tuple = (2.0, 4.0)
    history_depth: int = 5           # Q
    step_radius: float = 0.05        # km per slot
    arrival_probability: float = 1.0

    def __post_init__(self):
        if min(self.num_users, self.max_channels, self.max_serving, self.history_depth) < 1:
            raise ConfigurationError('user, channel, serving and history counts must be >= 1')
        if self.max_queue < 0 or self.cooldown < 0:
            raise ConfigurationError('max_queue and cooldown must be >= 0')
        for name in ('payload_range', 'min_rate_range', 'lifetime_slack'):
            low, high = getattr(self, name)
            if low > high or low < 0:
                raise ConfigurationError(f'{name} must be an ordered non-negative range')
        if self.step_radius < 0:
            raise ConfigurationError('step_radius must be >= 0')
        if not 0.0 <= self.arrival_probability <= 1.0:
            raise ConfigurationError('arrival_probability must lie in [0, 1]')
