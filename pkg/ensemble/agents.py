"""Policy ensembles of actor-critic members, for the operator and for the jammer."""
import logging

import numpy as np

from jammer.agents import ActorCriticJammer, jammer_policy_step, make_jammer
from jammer.learning import jammer_train_step
from jammer.targeting import channel_mask
from slicing.agents import ActorCriticAgent, SlicingAgent, make_agent
from slicing.replay import ReplayBuffer
from slicing_lab.exceptions import ConfigurationError

from .classify import JAMMER_CLASSES, RunningMean, classify_jammer, correlation_matrix
from .supervisor import EnsembleSupervisor

logger = logging.getLogger(__name__)


class EnsembleSlicingAgent(SlicingAgent):
    """E actor-critic members of the configured kind (macc or iac); one executes per slot.

    nespe -- every member trains on each shared record with its own dual reward;
    ape   -- records go to the executing member's buffer and only it trains.
    """

    uses_classes = True

    def __init__(self, params, traffic_params, num_stations, num_channels, rng, train_slots, config):
        super().__init__(params, traffic_params, num_stations, num_channels)
        self.kind = config.kind
        self.config = config
        self.members = [
            ActorCriticAgent(params, traffic_params, num_stations, num_channels, rng, train_slots)
            for _ in range(config.policies)
        ]
        self.supervisor = EnsembleSupervisor(config, config.num_classes, rng)
        self.shared = ReplayBuffer(params.buffer_capacity)
        self.policy = 0
        self.current = None
        self.last_slack = 0.0
        self.correlation = None
        self._fresh = set()

    @property
    def training(self):
        return self.members[0].training

    @training.setter
    def training(self, value):
        for member in self.members:
            member.training = value

    @property
    def updates(self):
        return sum(member.updates for member in self.members)

    def decide(self, observations, rng, slot):
        self.policy = self.supervisor.select()
        self.current = {'policy': self.policy, 'sigma': self.supervisor.sigma.copy(), 'class': None}
        if self.kind == 'nespe':
            # members only change at updates, so rho is refreshed once per training period
            if self.correlation is None or slot % self.params.train_period == 0:
                self.correlation = self.greedy_correlation(observations)
                self.last_slack = self.supervisor.slack(self.correlation)
            self.current['correlation'] = self.correlation
        return self.members[self.policy].decide(observations, rng, slot)

    def greedy_correlation(self, observations):
        greedy = [
            np.concatenate([member.greedy_action(obs).ravel() for obs in observations])
            for member in self.members
        ]
        return correlation_matrix(greedy)

    def record(self, observations, actions, outstanding, slot):
        for member in self.members:
            member.attach_next(observations)
        self.members[self.policy].open_transitions(observations, actions, outstanding, slot, extra=self.current)

    def settle(self, completed):
        for member in self.members:
            member.settle(completed)

    def observe_class(self, label):
        if self.current is not None:
            self.current['class'] = label

    def after_slot(self, rng, slot):
        for e, member in enumerate(self.members):
            for transition in member.pending.release():
                label = transition.extra.get('class') or 0
                self.supervisor.record(transition.extra['policy'], label, transition.reward)
                if self.kind == 'nespe':
                    self.shared.push(transition)
                else:
                    member.buffer.push(transition)
                    self._fresh.add(e)
        if self.training and (slot + 1) % self.params.train_period == 0:
            self.learn(rng)

    def learn(self, rng):
        if self.kind != 'nespe':
            for e in sorted(self._fresh):
                self.members[e].learn(rng)
            self._fresh.clear()
            return
        if len(self.shared) < self.params.batch_size:
            return
        batch = self.shared.sample(rng, self.params.batch_size)
        for e, member in enumerate(self.members):
            member.train_on(batch, self.supervisor.rewards(e, batch))
        logger.debug('nespe update: sigma %s, correlation slack %.3f', np.round(self.supervisor.sigma, 3),
                     self.last_slack)

    def snapshot(self):
        return {**self.supervisor.snapshot(), 'slack': self.last_slack}

    def modules(self):
        modules = {}
        for e, member in enumerate(self.members):
            modules.update({f'policy{e}_{name}': module for name, module in member.modules().items()})
        return modules


class EnsembleJammer(ActorCriticJammer):
    """E_J actor-critic jammer policies classified by the listen difference after each attack."""

    def __init__(self, config, ensemble_config, num_channels, rng):
        super().__init__(config, num_channels, rng, num_policies=ensemble_config.policies)
        self.ensemble = ensemble_config
        self.supervisor = EnsembleSupervisor(ensemble_config, JAMMER_CLASSES, rng)
        self.difference_mean = RunningMean()
        self.shared = ReplayBuffer(config.buffer_capacity)

    def select_policy(self, observation):
        return self.supervisor.select()

    def annotate(self, sample):
        sample.extra['sigma'] = self.supervisor.sigma.copy()
        if self.ensemble.kind == 'nespe':
            greedy = [
                channel_mask(jammer_policy_step(policy, sample.observation, self.n_j), self.num_channels)
                for policy in self.policies
            ]
            sample.extra['correlation'] = correlation_matrix(greedy)

    def complete(self, sample):
        mean = self.difference_mean.value
        label = 1 if mean is None else classify_jammer(sample.difference, mean)
        self.difference_mean.update(sample.difference)
        self.supervisor.record(sample.policy, label, sample.reward)
        if self.ensemble.kind != 'nespe':
            super().complete(sample)
            return
        self.shared.push(sample)
        if not self.training or len(self.shared) < self.config.batch_size:
            return
        batch = self.shared.sample(self.rng, self.config.batch_size)
        for e, policy in enumerate(self.policies):
            jammer_train_step(policy, batch, self.config.gamma, self.supervisor.rewards(e, batch))

    def snapshot(self):
        return self.supervisor.snapshot()


def make_victim(params, traffic_params, num_stations, num_channels, rng, train_slots, config):
    if config.kind == 'single':
        return make_agent(params, traffic_params, num_stations, num_channels, rng, train_slots)
    if not params.learns:
        raise ConfigurationError(f'a {config.kind} ensemble needs learning members, not {params.kind!r}')
    return EnsembleSlicingAgent(params, traffic_params, num_stations, num_channels, rng, train_slots, config)


def make_attacker(config, ensemble_config, num_channels, rng, oracle=None):
    if ensemble_config.kind == 'single' or config.kind != 'actor_critic':
        return make_jammer(config, num_channels, rng, oracle)
    return EnsembleJammer(config, ensemble_config, num_channels, rng)
