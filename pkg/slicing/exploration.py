"""epsilon-epsilon_m-greedy: actor with 1 - eps, otherwise max-rate (eps_m) or random."""
from dataclasses import dataclass
from enum import Enum

from slicing_lab.exceptions import ConfigurationError


class Mode(str, Enum):
    ACTOR = 'actor'
    MAX_RATE = 'max_rate'
    RANDOM = 'random'


@dataclass(frozen=True)
class ExplorationSchedule:
    epsilon_start: float = 1.0
    epsilon_end: float = 0.005
    max_rate_probability: float = 0.1
    train_slots: int = 50_000

    def __post_init__(self):
        if self.train_slots < 0:
            raise ConfigurationError('train_slots must be >= 0')
        if self.epsilon_end > self.epsilon_start:
            raise ConfigurationError('exploration must not increase over training')

    def epsilon(self, slot):
        """Linear from epsilon_start to epsilon_end over train_slots, then frozen."""
        if slot >= self.train_slots:
            return self.epsilon_end
        return self.epsilon_start - (self.epsilon_start - self.epsilon_end) * slot / self.train_slots

    def choose(self, rng, slot):
        if rng.random() >= self.epsilon(slot):
            return Mode.ACTOR
        if rng.random() <= self.max_rate_probability:
            return Mode.MAX_RATE
        return Mode.RANDOM
