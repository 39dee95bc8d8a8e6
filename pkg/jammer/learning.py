"""Actor-critic update of a jammer policy over a replayed mini-batch."""
from dataclasses import dataclass, field

import numpy as np

from neuralcore.feedforward import FeedForward
from neuralcore.optim import OptimizerState, optimizer_step
from slicing.replay import ReplayBuffer

PROBABILITY_FLOOR = 1e-12


@dataclass
class JamSample:
    slot: int
    observation: np.ndarray
    action: np.ndarray
    policy: int = 0
    reward: float | None = None
    difference: float | None = None   # summed d^listen of the following listen slot
    next_observation: np.ndarray | None = None
    extra: dict = field(default_factory=dict)


class JammerPolicy:
    """Sigmoid actor f^theta_J and scalar critic g^phi_J, one hidden layer each."""

    def __init__(self, input_size, num_channels, config, rng):
        self.actor = FeedForward([input_size, config.hidden_size, num_channels], rng, output='sigmoid')
        self.critic = FeedForward([input_size, config.hidden_size, 1], rng)
        self.actor_state = OptimizerState(config.learning_rate)
        self.critic_state = OptimizerState(config.learning_rate)
        self.buffer = ReplayBuffer(config.buffer_capacity)
        self.updates = 0

    def probabilities(self, observation):
        probs = self.actor.forward(observation)
        self.actor.pop_cache()
        return probs

    def value(self, observation):
        out = float(self.critic.forward(observation)[0])
        self.critic.pop_cache()
        return out

    def modules(self):
        return {'actor': self.actor, 'critic': self.critic}


def jammer_train_step(policy, batch, gamma, rewards=None):
    """delta_J = R_J + gamma g(O_J next) - g(O_J); critic descends delta^2 / 2,
    actor ascends sum over jammed channels of log P_J[c] times delta."""
    if not batch:
        return None
    policy.actor.zero_grad()
    policy.critic.zero_grad()
    scale = 1.0 / len(batch)
    deltas = np.zeros(len(batch))
    for i, sample in enumerate(batch):
        reward = sample.reward if rewards is None else rewards[i]
        target = reward + gamma * policy.value(sample.next_observation)
        delta = target - float(policy.critic.forward(sample.observation)[0])
        policy.critic.backward(np.array([-delta * scale]))
        deltas[i] = delta
        if delta == 0.0:
            continue
        probs = policy.actor.forward(sample.observation)
        grad = -delta * scale * sample.action / np.maximum(probs, PROBABILITY_FLOOR)
        policy.actor.backward(grad)
    optimizer_step(policy.actor, policy.actor_state)
    optimizer_step(policy.critic, policy.critic_state)
    policy.updates += 1
    return deltas
