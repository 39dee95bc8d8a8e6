"""Base-station request lifecycle: serving slots, FIFO queue, history and last action."""
import logging

import numpy as np

from slicing_lab.exceptions import ConstraintViolation, ShapeMismatchError

from .actions import check_action
from .history import RateHistory
from .requests import RequestStatus

logger = logging.getLogger(__name__)


class BaseStationState:

    def __init__(self, index, params, num_channels):
        self.index = index
        self.params = params
        self.num_channels = num_channels
        self.serving = []
        self.queue = []
        self.history = RateHistory(params.num_users, num_channels, params.history_depth)
        self.last_channels = {}

    @property
    def n_r(self):
        return len(self.serving)

    @property
    def n_q(self):
        return len(self.queue)

    @property
    def full(self):
        return self.n_r >= self.params.max_serving and self.n_q >= self.params.max_queue

    def serving_users(self):
        return [request.user for request in self.serving]

    def admit(self, request):
        """Join serving directly when a slot is free and nobody waits, else the queue."""
        if self.full:
            return False
        request.station = self.index
        if self.n_r < self.params.max_serving and not self.queue:
            request.move_to(RequestStatus.SERVING)
            self.serving.append(request)
        else:
            self.queue.append(request)
        return True

    def last_action(self):
        """A_b(t-1) rows aligned with the current serving order."""
        matrix = np.zeros((self.n_r, self.num_channels))
        for k, request in enumerate(self.serving):
            channels = self.last_channels.get(request.id)
            if channels is not None:
                matrix[k, channels] = 1.0
        return matrix

    def remember(self, action):
        self.last_channels = {
            request.id: np.flatnonzero(action[k]) for k, request in enumerate(self.serving)
        }

    def check(self, action=None):
        """Serving and queue bounds, plus the action constraints when an action is given."""
        if self.n_r > self.params.max_serving:
            raise ConstraintViolation(f'station {self.index}: {self.n_r} serving > N_r')
        if self.n_q > self.params.max_queue:
            raise ConstraintViolation(f'station {self.index}: {self.n_q} queued > N_q')
        if action is not None:
            check_action(action, self.n_r, self.num_channels, self.params.max_channels)

    def promote(self):
        while self.queue and self.n_r < self.params.max_serving:
            request = self.queue.pop(0)
            request.move_to(RequestStatus.SERVING)
            self.serving.append(request)


def step_requests(bs, realized_rates, slot=0):
    """Apply the min-rate, lifetime and payload rules for one slot.

    realized_rates[k] is r_k of bs.serving[k]. Returns (bs, [(request, reward), ...]).
    """
    if len(realized_rates) != bs.n_r:
        raise ShapeMismatchError(f'station {bs.index}: {len(realized_rates)} rates for {bs.n_r} requests')
    completed = []
    still_serving = []
    for request, rate in zip(bs.serving, realized_rates):
        if rate < request.min_rate or request.lifetime <= 0:
            request.fail(slot)
            completed.append((request, request.reward))
            continue
        request.lifetime -= 1
        request.payload = max(request.payload - rate, 0.0)
        if request.payload == 0.0:
            request.succeed(slot)
            completed.append((request, request.reward))
        else:
            still_serving.append(request)
    still_queued = []
    for request in bs.queue:
        if request.lifetime <= 0:
            request.fail(slot)
            completed.append((request, request.reward))
        else:
            request.lifetime -= 1
            still_queued.append(request)
    bs.serving = still_serving
    bs.queue = still_queued
    bs.promote()
    if completed:
        logger.debug('station %d slot %d: %d requests resolved', bs.index, slot, len(completed))
    return bs, completed
