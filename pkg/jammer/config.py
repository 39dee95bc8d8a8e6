from dataclasses import dataclass

from slicing_lab.exceptions import ConfigurationError

JAMMER_KINDS = ('none', 'actor_critic', 'last_interference', 'next_interference', 'max_rate')


@dataclass(frozen=True)
class JammerConfig:
    """N_J, n_J, T_J, gamma_J and placement, plus the learning knobs of the actor-critic jammer."""

    kind: str = 'actor_critic'
    max_channels: int = 8            # N_J
    channels_per_attack: int = 8     # n_J
    period: int = 2                  # T_J
    gamma: float = 0.9
    position: tuple = (0.1, 0.1)     # km
    height: float = 1.5              # m
    start_slot: int = 100
    train_until: int = 10_000
    epsilon_start: float = 1.0
    epsilon_end: float = 0.01
    learning_rate: float = 1e-5
    hidden_size: int = 16
    batch_size: int = 10
    buffer_capacity: int = 1000
    beta_window: int = 50            # jamming phases in T''
    initial_beta: float = 1.0
    fixed_beta: float | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in JAMMER_KINDS:
            raise ConfigurationError(f'jammer kind must be one of {JAMMER_KINDS}, got {self.kind!r}')
        if not 1 <= self.channels_per_attack <= self.max_channels:
            raise ConfigurationError('need 1 <= n_J <= N_J')
        if self.period < 2:
            raise ConfigurationError('T_J must be >= 2 to leave a listening slot per period')
        if not 0.0 <= self.gamma < 1.0:
            raise ConfigurationError('gamma must lie in [0, 1)')
        if self.start_slot < 0 or self.train_until < self.start_slot:
            raise ConfigurationError('need 0 <= start_slot <= train_until')
        if self.fixed_beta is not None and self.fixed_beta < 0:
            raise ConfigurationError('fixed_beta must be >= 0')
        if self.beta_window < 1 or self.batch_size < 1 or self.hidden_size < 1:
            raise ConfigurationError('beta_window, batch_size and hidden_size must be >= 1')

    @property
    def enabled(self):
        return self.kind != 'none'

    def validate(self, num_channels):
        if self.max_channels > num_channels:
            raise ConfigurationError(f'N_J={self.max_channels} exceeds N={num_channels}')
