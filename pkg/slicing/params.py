from dataclasses import dataclass

from slicing_lab.exceptions import ConfigurationError

AGENT_KINDS = ('macc', 'iac', 'fifo', 'hard_slicing', 'max_rate', 'random')
ACTOR_KINDS = ('pointer', 'fnn')


@dataclass(frozen=True)
class AgentParams:
    kind: str = 'macc'
    actor: str = 'pointer'
    encoder_hidden: int = 70         # h_e = h_d
    critic_hidden: int = 70
    fnn_hidden: tuple = (70,)
    attention_v: float = 1.0
    actor_learning_rate: float = 1e-6
    critic_learning_rate: float = 1e-6
    gamma: float = 0.9
    batch_size: int = 10
    train_period: int = 10           # T_t
    buffer_capacity: int = 1000
    epsilon_start: float = 1.0
    epsilon_end: float = 0.005
    epsilon_max_rate: float = 0.1

    def __post_init__(self):
        if self.kind not in AGENT_KINDS:
            raise ConfigurationError(f'agent kind must be one of {AGENT_KINDS}, got {self.kind!r}')
        if self.actor not in ACTOR_KINDS:
            raise ConfigurationError(f'actor must be one of {ACTOR_KINDS}, got {self.actor!r}')
        if min(self.encoder_hidden, self.critic_hidden, self.batch_size, self.train_period) < 1:
            raise ConfigurationError('hidden sizes, batch size and training period must be >= 1')
        if self.buffer_capacity < self.batch_size:
            raise ConfigurationError('buffer_capacity must hold at least one mini-batch')
        if not 0.0 <= self.gamma < 1.0:
            raise ConfigurationError('gamma must lie in [0, 1)')
        for name in ('epsilon_start', 'epsilon_end', 'epsilon_max_rate'):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ConfigurationError(f'{name} must be a probability')

    @property
    def learns(self):
        return self.kind in ('macc', 'iac')
