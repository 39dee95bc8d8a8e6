from types import SimpleNamespace

import numpy as np
import pytest

from neuralcore.optim import OptimizerState
from slicing.agents import ActorCriticAgent
from slicing.learning import critic_td, train_step
from slicing.networks import Critic, PointerActor
from slicing.params import AgentParams
from slicing.replay import PendingRewards, ReplayBuffer, Transition
from traffic.params import TrafficParams

from .conftest import build_observation


def constant_critic(value, width=4):
    critic = Critic(width, 3, np.random.default_rng(0))
    critic.net.params['W1'].fill(0.0)
    critic.net.params['b1'][...] = value
    return critic


def make_transition(rng, reward, width=12, slot=0):
    obs = build_observation(rng, n_r=2)
    action = np.array([[1, 0, 1], [0, 1, 0]])
    transition = Transition(slot, [obs], [action], obs.flat()[:width], next_critic_input=rng.standard_normal(width))
    transition.reward = reward
    return transition

# === TD error ===

def test_td_arithmetic():
    assert critic_td(constant_critic(2.0), np.ones(4), np.zeros(4), 1.0, 0.9) == pytest.approx(0.8)

def test_zero_critic_returns_reward():
    assert critic_td(constant_critic(0.0), np.ones(4), np.ones(4), 3.5, 0.9) == pytest.approx(3.5)

def test_fixed_point_gives_zero():
    # g = R / (1 - gamma) on a loop that always pays R
    assert critic_td(constant_critic(10.0), np.ones(4), np.ones(4), 1.0, 0.9) == pytest.approx(0.0)

# === Train step ===

def test_zero_advantage_leaves_actor_unchanged():
    rng = np.random.default_rng(1)
    actor = PointerActor(3, 2, 1, 4, rng)
    critic = constant_critic(0.0, width=12)
    before = actor.state_dict()
    batch = [make_transition(rng, 0.0) for _ in range(3)]
    deltas = train_step(actor, [critic], batch, OptimizerState(1e-3), [OptimizerState(1e-3)], 0.9)
    assert np.all(deltas == 0.0)
    for name, value in actor.named_parameters():
        assert np.array_equal(value, before[name])

def test_critic_update_reduces_squared_td():
    rng = np.random.default_rng(2)
    actor = PointerActor(3, 2, 1, 4, rng)
    critic = Critic(12, 8, rng)
    transition = make_transition(rng, 3.0)
    before = critic_td(critic, transition.critic_input, transition.next_critic_input, 3.0, 0.0)
    train_step(actor, [critic], [transition], OptimizerState(1e-4), [OptimizerState(1e-4)], 0.0)
    after = critic_td(critic, transition.critic_input, transition.next_critic_input, 3.0, 0.0)
    assert after ** 2 < before ** 2

def test_actor_moves_towards_rewarded_action():
    rng = np.random.default_rng(3)
    actor = PointerActor(3, 2, 1, 4, rng)
    transition = make_transition(rng, 5.0)
    obs, action = transition.observations[0], transition.actions[0]
    before = np.log(actor.forward(obs))[action == 1].sum()
    actor.clear_cache()
    train_step(actor, [constant_critic(0.0, width=12)], [transition], OptimizerState(1e-3), [OptimizerState(1e-3)], 0.0)
    after = np.log(actor.forward(obs))[action == 1].sum()
    assert after > before

def test_empty_batch_is_noop():
    rng = np.random.default_rng(0)
    actor = PointerActor(3, 2, 1, 4, rng)
    assert train_step(actor, [constant_critic(0.0)], [], OptimizerState(1e-3), [OptimizerState(1e-3)], 0.9) is None

# === Agents ===

def build_agent(seed, kind='macc'):
    params = AgentParams(kind=kind, encoder_hidden=4, critic_hidden=6, batch_size=2, buffer_capacity=10, train_period=1,
                         actor_learning_rate=1e-3, critic_learning_rate=1e-3)
    traffic = TrafficParams(num_users=4, max_channels=2, max_serving=2, max_queue=1)
    return ActorCriticAgent(params, traffic, 2, 3, np.random.default_rng(seed), train_slots=100)


def feed(agent, seed):
    rng = np.random.default_rng(seed)
    for slot in range(4):
        observations = [build_observation(rng, n_r=2, station=b) for b in range(2)]
        actions = agent.decide(observations, rng, slot)
        agent.record(observations, actions, [{2 * slot}, {2 * slot + 1}], slot)
        agent.settle([(SimpleNamespace(id=2 * slot), 1.0), (SimpleNamespace(id=2 * slot + 1), -0.5)])
        agent.after_slot(rng, slot)
    return agent


def test_synchronized_runs_are_identical():
    first, second = feed(build_agent(4), 8), feed(build_agent(4), 8)
    assert first.updates == second.updates > 0
    for (name, a), (_, b) in zip(first.actor.named_parameters(), second.actor.named_parameters()):
        assert np.array_equal(a, b), name

def test_stations_share_actor_parameters():
    agent = feed(build_agent(5), 1)
    states = [actor.state_dict() for actor in agent.actors]
    for name in states[0]:
        assert all(np.array_equal(states[0][name], state[name]) for state in states[1:])

def test_macc_sample_waits_for_all_stations():
    agent = build_agent(6)
    rng = np.random.default_rng(0)
    observations = [build_observation(rng, n_r=2, station=b) for b in range(2)]
    agent.record(observations, agent.decide(observations, rng, 0), [{1}, {2}], 0)
    agent.record(observations, agent.decide(observations, rng, 1), [set(), set()], 1)
    agent.settle([(SimpleNamespace(id=1), 1.5)])
    agent.after_slot(rng, 1)
    assert len(agent.buffer) == 0
    agent.settle([(SimpleNamespace(id=2), -1.0)])
    agent.after_slot(rng, 2)
    assert [t.reward for t in agent.buffer.items()] == [0.5]

def test_iac_has_one_critic_per_station():
    agent = build_agent(7, kind='iac')
    assert len(agent.critics) == 2
    assert agent.critics[0].net.sizes[0] == agent.critics[1].net.sizes[0] < build_agent(7).critics[0].net.sizes[0]

# === Buffers ===

def test_pending_reward_sums_over_waiting_requests():
    pending = PendingRewards()
    transition = Transition(0, [], [], np.zeros(1), next_critic_input=np.zeros(1))
    pending.add(transition, {1, 2})
    pending.settle(1, 2.0)
    assert pending.release() == []
    pending.settle(2, -1.5)
    assert pending.release() == [transition]
    assert transition.reward == pytest.approx(0.5)

def test_replay_buffer_is_bounded():
    buffer = ReplayBuffer(3)
    for item in range(5):
        buffer.push(item)
    assert buffer.items() == [2, 3, 4]
    assert sorted(buffer.sample(np.random.default_rng(0), 2))[0] >= 2
