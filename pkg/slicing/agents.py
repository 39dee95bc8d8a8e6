"""Slot-level slicing agents: deep actor-critic (MACC / IAC) and the statistical baselines."""
import logging
from collections import Counter

from neuralcore.optim import OptimizerState

from .baselines import BASELINE_KINDS, baseline_action
from .decoding import channels_to_request, decode_action, max_rate_action, random_action
from .exploration import ExplorationSchedule, Mode
from .learning import train_step
from .networks import Critic, make_actor
from .observation import critic_input, flat_size
from .replay import PendingRewards, ReplayBuffer, Transition

logger = logging.getLogger(__name__)


class SlicingAgent:
    """Per-slot protocol: decide, record, settle, after_slot. Non-learning agents only decide."""

    kind = None
    uses_classes = False

    def __init__(self, params, traffic_params, num_stations, num_channels):
        self.params = params
        self.traffic_params = traffic_params
        self.num_stations = num_stations
        self.num_channels = num_channels

    def n_c(self, observation):
        return channels_to_request(observation.n_r, self.num_channels, self.traffic_params.max_channels)

    def decide(self, observations, rng, slot):
        raise NotImplementedError

    def record(self, observations, actions, outstanding, slot):
        pass

    def settle(self, completed):
        pass

    def observe_class(self, label):
        """Opponent class l of the slot just played; only ensembles use it."""

    def after_slot(self, rng, slot):
        pass

    def modules(self):
        return {}


class BaselineAgent(SlicingAgent):

    def __init__(self, params, traffic_params, num_stations, num_channels):
        super().__init__(params, traffic_params, num_stations, num_channels)
        self.kind = params.kind

    def decide(self, observations, rng, slot):
        return [
            baseline_action(self.kind, obs, self.traffic_params.max_channels, rng) for obs in observations
        ]


class ActorCriticAgent(SlicingAgent):
    """Shared-parameter actor for every station.

    macc -- one centralized critic over the global O, trained on sum R over K(t);
    iac  -- one critic per station over its own O_b, trained on its local rewards.
    """

    def __init__(self, params, traffic_params, num_stations, num_channels, rng, train_slots):
        super().__init__(params, traffic_params, num_stations, num_channels)
        self.kind = params.kind
        tp = traffic_params
        self.actor = make_actor(params, num_channels, tp.max_serving, tp.max_queue, rng)
        station_width = flat_size(num_channels, tp.max_serving, tp.max_queue)
        if self.centralized:
            self.critics = [Critic(station_width * num_stations, params.critic_hidden, rng)]
        else:
            self.critics = [Critic(station_width, params.critic_hidden, rng) for _ in range(num_stations)]
        self.actor_state = OptimizerState(params.actor_learning_rate)
        self.critic_states = [OptimizerState(params.critic_learning_rate) for _ in self.critics]
        self.schedule = ExplorationSchedule(
            params.epsilon_start, params.epsilon_end, params.epsilon_max_rate, train_slots,
        )
        self.pending = PendingRewards()
        self.buffer = ReplayBuffer(params.buffer_capacity)
        self.training = True
        self.mode_counts = Counter()
        self.updates = 0
        self._open = []

    @property
    def centralized(self):
        return self.kind == 'macc'

    @property
    def actors(self):
        return [self.actor] * self.num_stations

    def greedy_action(self, observation):
        if observation.n_r == 0:
            return decode_action(observation.live_history(), 0)
        probs = self.actor.forward(observation)
        self.actor.clear_cache()
        return decode_action(probs, self.n_c(observation))

    def act(self, observation, rng, slot):
        n_c = self.n_c(observation)
        if observation.n_r == 0:
            return decode_action(observation.live_history(), 0)
        mode = self.schedule.choose(rng, slot)
        self.mode_counts[mode] += 1
        if mode is Mode.ACTOR:
            return self.greedy_action(observation)
        if mode is Mode.MAX_RATE:
            return max_rate_action(observation.live_history(), n_c)
        return random_action(observation.n_r, n_c, self.num_channels, rng)

    def decide(self, observations, rng, slot):
        return [self.act(obs, rng, slot) for obs in observations]

    def transitions(self, observations, actions, outstanding, slot):
        if self.centralized:
            waiting = set().union(*outstanding) if outstanding else set()
            return [(Transition(slot, list(observations), list(actions), critic_input(observations)), waiting)]
        return [
            (Transition(slot, [obs], [action], obs.flat(), critic_index=b), outstanding[b])
            for b, (obs, action) in enumerate(zip(observations, actions))
        ]

    def attach_next(self, observations):
        for transition in self._open:
            if self.centralized:
                transition.next_critic_input = critic_input(observations)
            else:
                transition.next_critic_input = observations[transition.critic_index].flat()
        self._open = []

    def open_transitions(self, observations, actions, outstanding, slot, extra=None):
        for transition, waiting in self.transitions(observations, actions, outstanding, slot):
            if extra is not None:
                transition.extra = extra
            self.pending.add(transition, waiting)
            self._open.append(transition)

    def record(self, observations, actions, outstanding, slot):
        self.attach_next(observations)
        self.open_transitions(observations, actions, outstanding, slot)

    def settle(self, completed):
        for request, reward in completed:
            self.pending.settle(request.id, reward)

    def train_on(self, batch, rewards=None):
        deltas = train_step(
            self.actor, self.critics, batch, self.actor_state, self.critic_states, self.params.gamma, rewards,
        )
        if deltas is not None:
            self.updates += 1
        return deltas

    def learn(self, rng):
        if len(self.buffer) < self.params.batch_size:
            return None
        return self.train_on(self.buffer.sample(rng, self.params.batch_size))

    def after_slot(self, rng, slot):
        for transition in self.pending.release():
            self.buffer.push(transition)
        if self.training and (slot + 1) % self.params.train_period == 0:
            deltas = self.learn(rng)
            if deltas is not None:
                logger.debug('slot %d: %s update, mean |delta| %.4f', slot, self.kind, abs(deltas).mean())

    def modules(self):
        modules = {'actor': self.actor}
        modules.update({f'critic{i}': critic for i, critic in enumerate(self.critics)})
        return modules


def make_agent(params, traffic_params, num_stations, num_channels, rng, train_slots):
    if params.kind in BASELINE_KINDS:
        return BaselineAgent(params, traffic_params, num_stations, num_channels)
    return ActorCriticAgent(params, traffic_params, num_stations, num_channels, rng, train_slots)
