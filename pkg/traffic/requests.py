from dataclasses import dataclass
from enum import Enum

import numpy as np

from slicing_lab.exceptions import ConstraintViolation


class RequestStatus(str, Enum):
    QUEUED = 'queued'
    SERVING = 'serving'
    SUCCESS = 'success'
    FAILED = 'failed'
    DENIED = 'denied'


TERMINAL = {RequestStatus.SUCCESS, RequestStatus.FAILED, RequestStatus.DENIED}

ALLOWED = {
    RequestStatus.QUEUED: {RequestStatus.SERVING, RequestStatus.FAILED, RequestStatus.DENIED},
    RequestStatus.SERVING: {RequestStatus.SUCCESS, RequestStatus.FAILED},
}

INFO_SIZE = 4


@dataclass
class Request:
    id: int
    user: int
    payload: float
    min_rate: float
    lifetime: float
    initial_payload: float
    status: RequestStatus = RequestStatus.QUEUED
    reward: float = 0.0
    station: int = -1
    arrival_slot: int = 0
    end_slot: int = -1

    @classmethod
    def new(cls, request_id, user, payload, min_rate, lifetime, slot=0):
        return cls(request_id, user, payload, min_rate, lifetime, payload, arrival_slot=slot)

    @property
    def done(self):
        return self.status in TERMINAL

    def move_to(self, status):
        if status not in ALLOWED.get(self.status, ()):
            raise ConstraintViolation(f'request {self.id}: illegal transition {self.status.value} -> {status.value}')
        self.status = status

    def succeed(self, slot):
        self.move_to(RequestStatus.SUCCESS)
        self.reward = self.initial_payload
        self.end_slot = slot

    def fail(self, slot):
        self.move_to(RequestStatus.FAILED)
        self.reward = -self.initial_payload
        self.end_slot = slot

    def info(self):
        """I_b^k = (remaining payload, minimum rate, remaining lifetime, |reward|)."""
        return np.array([self.payload, self.min_rate, self.lifetime, self.initial_payload])
