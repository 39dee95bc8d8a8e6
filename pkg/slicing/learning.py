"""TD error and the alternating critic/actor update shared by MACC and IAC."""
import numpy as np

from neuralcore.optim import optimizer_step


def critic_td(critic, previous_input, current_input, reward, gamma):
    """delta = sum R + gamma g(O(t)) - g(O(t-1))."""
    return reward + gamma * critic.value(current_input) - critic.value(previous_input)


def train_step(actor, critics, batch, actor_state, critic_states, gamma, rewards=None):
    """One mini-batch update; returns the TD errors, or None for an empty batch.

    The critic descends the semi-gradient of delta^2 / 2; the actor ascends
    sum log P over the assigned entries times delta. ``rewards`` overrides the
    transitions' own rewards (ensemble dual rewards).
    """
    if not batch:
        return None
    actor.zero_grad()
    for critic in critics:
        critic.zero_grad()
    scale = 1.0 / len(batch)
    deltas = np.zeros(len(batch))
    for i, transition in enumerate(batch):
        reward = transition.reward if rewards is None else rewards[i]
        critic = critics[transition.critic_index]
        target = reward + gamma * critic.value(transition.next_critic_input)
        delta = target - critic.forward(transition.critic_input)
        critic.backward(-delta * scale)
        deltas[i] = delta
        if delta == 0.0:
            continue
        for observation, action in zip(transition.observations, transition.actions):
            if observation.n_r == 0 or not np.any(action):
                continue
            actor.forward(observation)
            actor.backward(-delta * scale * np.asarray(action, dtype=np.float64))
    optimizer_step(actor, actor_state)
    for critic, state in zip(critics, critic_states):
        optimizer_step(critic, state)
    return deltas
