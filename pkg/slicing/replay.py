"""Delayed-reward samples, pending bookkeeping and the replay buffer."""
from collections import deque
from dataclasses import dataclass, field

import numpy as np


@dataclass
class Transition:
    """One decision slot; reward is the sum over K(t) once all of it has resolved."""

    slot: int
    observations: list          # StationObservation per acting station
    actions: list               # ActionMatrix per acting station
    critic_input: np.ndarray    # O(t)
    critic_index: int = 0
    next_critic_input: np.ndarray | None = None
    reward: float = 0.0
    extra: dict = field(default_factory=dict)


class PendingRewards:
    """Holds transitions until every request they wait on has resolved and O(t+1) is known."""

    def __init__(self):
        self._entries = []
        self._waiting = {}
        self._by_request = {}

    def __len__(self):
        return len(self._entries)

    def add(self, transition, request_ids):
        key = id(transition)
        self._entries.append(transition)
        self._waiting[key] = set(request_ids)
        for request_id in request_ids:
            self._by_request.setdefault(request_id, []).append(transition)

    def settle(self, request_id, reward):
        for transition in self._by_request.pop(request_id, []):
            transition.reward += reward
            self._waiting[id(transition)].discard(request_id)

    def release(self):
        ready, kept = [], []
        for transition in self._entries:
            if not self._waiting[id(transition)] and transition.next_critic_input is not None:
                ready.append(transition)
                del self._waiting[id(transition)]
            else:
                kept.append(transition)
        self._entries = kept
        return ready


class ReplayBuffer:

    def __init__(self, capacity):
        self.capacity = capacity
        self._items = deque(maxlen=capacity)

    def __len__(self):
        return len(self._items)

    def push(self, item):
        self._items.append(item)

    def sample(self, rng, batch_size):
        """Uniform mini-batch without replacement; everything when the buffer is smaller."""
        if len(self._items) <= batch_size:
            return list(self._items)
        return [self._items[i] for i in rng.choice(len(self._items), size=batch_size, replace=False)]

    def items(self):
        return list(self._items)
