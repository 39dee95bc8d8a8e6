"""Jammers. Each one sees only its listening vectors and its own past actions."""
import logging
from collections import deque
from dataclasses import replace

import numpy as np

from slicing_lab.exceptions import ConfigurationError

from .learning import JammerPolicy, JamSample, jammer_train_step
from .schedule import PhaseSchedule
from .targeting import BetaEstimator, channel_mask, interpolate_target, jam_reward, listen_difference, top_channels

logger = logging.getLogger(__name__)


class Jammer:

    kind = None

    def __init__(self, config, num_channels, rng):
        config.validate(num_channels)
        self.config = config
        self.num_channels = num_channels
        self.rng = rng
        self.schedule = PhaseSchedule(config.period, config.start_slot)
        self.listens = {}
        self.actions = {}
        self.jammed_channel_slots = 0
        self.trace = []

    @property
    def n_j(self):
        return self.config.channels_per_attack

    def random_channels(self):
        return np.sort(self.rng.choice(self.num_channels, size=self.n_j, replace=False))

    def step(self, slot, listen):
        """Jam mask for this slot, or None while listening.

        ``listen`` is a zero-argument callable giving N^listen for the slot; it is
        only evaluated in listening phases.
        """
        if self.schedule.is_jamming(slot):
            channels = self.choose(slot)
            mask = channel_mask(channels, self.num_channels)
            self.actions[slot] = mask
            self.jammed_channel_slots += len(channels)
            self.trace.append({'slot': slot, 'phase': 'jam', 'channels': int(mask.sum())})
            self.jammed(slot, mask)
            return mask
        vector = np.asarray(listen(), dtype=np.float64)
        self.listens[slot] = vector
        record = {'slot': slot, 'phase': 'listen' if self.schedule.is_active(slot) else 'warmup', 'channels': 0}
        record.update(self.heard(slot, vector) or {})
        self.trace.append(record)
        self._forget(slot)
        return None

    def _forget(self, slot):
        horizon = slot - self.config.period - 2
        for memory in (self.listens, self.actions):
            for old in [s for s in memory if s < horizon]:
                del memory[old]

    def choose(self, slot):
        raise NotImplementedError

    def jammed(self, slot, mask):
        pass

    def heard(self, slot, vector):
        return None

    def average_power(self, slots, jam_power):
        return self.jammed_channel_slots * jam_power / slots if slots else 0.0

    def modules(self):
        return {}


class LastInterferenceJammer(Jammer):
    """Jams the n_J channels loudest in the previous listening slot."""

    kind = 'last_interference'

    def choose(self, slot):
        previous = self.listens.get(slot - 1)
        if previous is None:
            return self.random_channels()
        return top_channels(previous, self.n_j)


class MaxRateJammer(Jammer):
    """Oracle baseline: channels drawn with probability proportional to r^max_c."""

    kind = 'max_rate'

    def __init__(self, config, num_channels, rng, oracle):
        super().__init__(config, num_channels, rng)
        self.oracle = oracle

    def choose(self, slot):
        rates = np.asarray(self.oracle(), dtype=np.float64)
        total = rates.sum()
        probs = rates / total if total > 0 else None
        return np.sort(self.rng.choice(self.num_channels, size=self.n_j, replace=False, p=probs))


def jammer_policy_step(policy, observation, channels_per_attack):
    """C_J: the n_J channels with the largest P_J."""
    return top_channels(policy.probabilities(observation), channels_per_attack)


class ActorCriticJammer(Jammer):
    """Listening-target actor-critic jammer.

    The window O_J(t) = {O_J^J(t - T_J), O_J^L(t - T_J + 1), ..., O_J^L(t - 1)} is
    only complete once a jamming phase has been observed. The reward of the attack
    at t arrives with the listen at t + 1; the sample completes when the next
    window is formed.
    """

    kind = 'actor_critic'

    def __init__(self, config, num_channels, rng, num_policies=1):
        super().__init__(config, num_channels, rng)
        width = config.period * num_channels
        self.policies = [JammerPolicy(width, num_channels, config, rng) for _ in range(num_policies)]
        self.estimator = BetaEstimator(config.beta_window, config.initial_beta)
        self.window = deque(maxlen=config.period)
        self.training = True
        self._pending = None

    @property
    def beta(self):
        if self.config.fixed_beta is not None:
            return self.config.fixed_beta
        return self.estimator.beta

    def epsilon(self, slot):
        config = self.config
        if slot >= config.train_until:
            return config.epsilon_end
        span = config.train_until - config.start_slot
        progress = (slot - config.start_slot) / span if span else 1.0
        return config.epsilon_start - (config.epsilon_start - config.epsilon_end) * max(progress, 0.0)

    def observation(self):
        if len(self.window) < self.config.period or self.window[0][0] != 'jam':
            return None
        return np.concatenate([vector for _, vector in self.window])

    def select_policy(self, observation):
        return 0

    def annotate(self, sample):
        pass

    def choose(self, slot):
        observation = self.observation()
        pending, self._pending = self._pending, None
        if pending is not None and observation is not None and pending.reward is not None:
            pending.next_observation = observation
            self.complete(pending)
        e = self.select_policy(observation)
        if observation is None or self.rng.random() < self.epsilon(slot):
            channels = self.random_channels()
        else:
            channels = jammer_policy_step(self.policies[e], observation, self.n_j)
        if observation is not None:
            self._pending = JamSample(slot, observation, channel_mask(channels, self.num_channels), policy=e)
            self.annotate(self._pending)
        return channels

    def jammed(self, slot, mask):
        self.window.append(('jam', mask))

    def heard(self, slot, vector):
        peak = vector.max()
        self.window.append(('listen', vector / peak if peak > 0 else vector))
        before = self.listens.get(slot - 2)
        if before is None:
            return None
        difference = listen_difference(before, vector)
        if (slot - 1) in self.listens:
            self.estimator.add_listen(difference)
            return None
        if (slot - 1) not in self.actions:
            return None
        if self.config.fixed_beta is None:
            self.estimator.add_jam(difference)
        target = interpolate_target(before, vector, self.beta)
        reward = jam_reward(self.actions[slot - 1], target)
        if self._pending is not None and self._pending.slot == slot - 1:
            self._pending.reward = reward
            self._pending.difference = float(difference.sum())
        return {'beta': self.beta, 'reward': reward}

    def complete(self, sample):
        policy = self.policies[sample.policy]
        policy.buffer.push(sample)
        self.train(policy)

    def train(self, policy, rewards_of=None):
        if not self.training or len(policy.buffer) < self.config.batch_size:
            return None
        batch = policy.buffer.sample(self.rng, self.config.batch_size)
        rewards = None if rewards_of is None else [rewards_of(sample) for sample in batch]
        return jammer_train_step(policy, batch, self.config.gamma, rewards)

    def modules(self):
        modules = {}
        for e, policy in enumerate(self.policies):
            modules.update({f'jammer{e}_{name}': module for name, module in policy.modules().items()})
        return modules


def make_jammer(config, num_channels, rng, oracle=None):
    if not config.enabled:
        return None
    if config.kind == 'last_interference':
        return LastInterferenceJammer(config, num_channels, rng)
    if config.kind == 'max_rate':
        if oracle is None:
            raise ConfigurationError('the max-rate jammer needs a channel-rate oracle')
        return MaxRateJammer(config, num_channels, rng, oracle)
    if config.kind == 'next_interference':
        return ActorCriticJammer(replace(config, fixed_beta=0.0), num_channels, rng)
    return ActorCriticJammer(config, num_channels, rng)
