"""Reward bookkeeping: every request is counted once, rewards are conserved."""
import math
from dataclasses import dataclass, field

from slicing_lab.exceptions import ConstraintViolation

from .requests import RequestStatus


@dataclass
class RewardLedger:
    rewards: list = field(default_factory=list)
    success_payloads: list = field(default_factory=list)
    failure_payloads: list = field(default_factory=list)
    denials: int = 0
    outcomes: list = field(default_factory=list)
    _seen: set = field(default_factory=set)

    def record(self, request):
        if request.id in self._seen:
            raise ConstraintViolation(f'request {request.id} counted twice')
        self._seen.add(request.id)
        self.outcomes.append({
            'request': request.id,
            'station': request.station,
            'user': request.user,
            'status': request.status.value,
            'reward': request.reward,
            'initial_payload': request.initial_payload,
            'arrival_slot': request.arrival_slot,
            'end_slot': request.end_slot,
        })
        if request.status is RequestStatus.DENIED:
            self.denials += 1
            return
        self.rewards.append(request.reward)
        if request.status is RequestStatus.SUCCESS:
            self.success_payloads.append(request.initial_payload)
        elif request.status is RequestStatus.FAILED:
            self.failure_payloads.append(request.initial_payload)
        else:
            raise ConstraintViolation(f'request {request.id} recorded while {request.status.value}')

    @property
    def successes(self):
        return len(self.success_payloads)

    @property
    def failures(self):
        return len(self.failure_payloads)

    @property
    def total_reward(self):
        return math.fsum(self.rewards)

    def completion_ratio(self):
        resolved = self.successes + self.failures
        return self.successes / resolved if resolved else 0.0

    def check_conservation(self):
        if len(self.outcomes) != len(self._seen):
            raise ConstraintViolation(f'{len(self.outcomes)} outcomes for {len(self._seen)} requests')
        counted = self.successes + self.failures + self.denials
        if counted != len(self.outcomes):
            raise ConstraintViolation(f'{counted} counted outcomes, {len(self.outcomes)} recorded')
        expected = math.fsum(self.success_payloads) - math.fsum(self.failure_payloads)
        # counts are exact; the float sums differ only by rounding
        if not math.isclose(self.total_reward, expected, rel_tol=1e-12, abs_tol=1e-9):
            raise ConstraintViolation(f'reward sum {self.total_reward} != {expected}')
