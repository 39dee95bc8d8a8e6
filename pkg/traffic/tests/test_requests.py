import numpy as np
import pytest

from traffic.ledger import RewardLedger
from traffic.params import TrafficParams
from traffic.requests import Request, RequestStatus
from traffic.station import BaseStationState, step_requests
from slicing_lab.exceptions import ConstraintViolation, ShapeMismatchError


@pytest.fixture
def station():
    return BaseStationState(0, TrafficParams(num_users=6, max_serving=2, max_queue=1), num_channels=4)


def serving_request(request_id, payload, min_rate, lifetime, user=0):
    request = Request.new(request_id, user, payload, min_rate, lifetime)
    request.move_to(RequestStatus.SERVING)
    return request

# === Lifecycle ===

def test_payload_completes_within_lifetime(station):
    station.serving = [serving_request(1, payload=1.0, min_rate=0.5, lifetime=3)]
    _, completed = step_requests(station, [2.0])
    request, reward = completed[0]
    assert request.payload == 0.0
    assert request.status is RequestStatus.SUCCESS
    assert reward == pytest.approx(1.0)

def test_rate_below_minimum_fails(station):
    station.serving = [serving_request(1, payload=1.5, min_rate=0.9, lifetime=3)]
    _, completed = step_requests(station, [0.9 - 1e-9])
    request, reward = completed[0]
    assert request.status is RequestStatus.FAILED
    assert reward == pytest.approx(-1.5)

def test_partial_transmission_keeps_serving(station):
    station.serving = [serving_request(1, payload=5.0, min_rate=2.0, lifetime=4)]
    _, completed = step_requests(station, [2.0])
    assert completed == []
    request = station.serving[0]
    assert request.payload == pytest.approx(3.0)
    assert request.lifetime == pytest.approx(3.0)
    assert request.status is RequestStatus.SERVING

def test_expired_lifetime_fails(station):
    station.serving = [serving_request(1, payload=1.0, min_rate=0.1, lifetime=0)]
    _, completed = step_requests(station, [5.0])
    assert completed[0][0].status is RequestStatus.FAILED

def test_queued_request_expires(station):
    station.serving = [serving_request(1, 2.0, 0.1, 5)]
    waiting = Request.new(2, 1, 1.0, 0.5, 0)
    station.queue = [waiting]
    step_requests(station, [0.5])
    assert waiting.status is RequestStatus.FAILED
    assert station.queue == []

def test_completion_promotes_queue_fifo(station):
    station.serving = [serving_request(1, 0.5, 0.1, 5), serving_request(2, 3.0, 0.1, 5, user=1)]
    first, second = Request.new(3, 2, 1.0, 0.5, 5), Request.new(4, 3, 1.0, 0.5, 5)
    station.queue = [first, second]
    step_requests(station, [1.0, 0.5])
    assert [r.id for r in station.serving] == [2, 3]
    assert first.status is RequestStatus.SERVING
    assert station.queue == [second]

def test_rates_must_match_serving(station):
    station.serving = [serving_request(1, 1.0, 0.1, 3)]
    with pytest.raises(ShapeMismatchError):
        step_requests(station, [])

def test_illegal_transition_rejected():
    request = serving_request(1, 1.0, 0.1, 3)
    request.succeed(0)
    with pytest.raises(ConstraintViolation):
        request.fail(1)

# === Admission ===

def test_admission_prefers_serving_then_queue(station):
    for request_id in range(3):
        assert station.admit(Request.new(request_id, request_id, 1.0, 0.5, 3))
    assert station.n_r == 2 and station.n_q == 1
    assert station.full
    assert not station.admit(Request.new(9, 4, 1.0, 0.5, 3))

# === Ledger ===

def test_ledger_conserves_rewards():
    ledger = RewardLedger()
    rng = np.random.default_rng(0)
    for request_id in range(200):
        request = serving_request(request_id, rng.uniform(1, 2), 0.5, 3)
        if rng.random() < 0.7:
            request.succeed(0)
        else:
            request.fail(0)
        ledger.record(request)
    ledger.check_conservation()
    assert ledger.successes + ledger.failures == 200

def test_ledger_counts_once():
    ledger = RewardLedger()
    request = serving_request(1, 1.0, 0.5, 3)
    request.succeed(0)
    ledger.record(request)
    with pytest.raises(ConstraintViolation):
        ledger.record(request)

def test_ledger_counts_are_checked_exactly():
    ledger = RewardLedger()
    request = serving_request(1, 1.0, 0.5, 3)
    request.succeed(0)
    ledger.record(request)
    ledger.check_conservation()
    ledger.denials += 1
    with pytest.raises(ConstraintViolation, match='counted outcomes'):
        ledger.check_conservation()
    ledger.denials -= 1
    ledger.outcomes.append(dict(ledger.outcomes[0]))
    with pytest.raises(ConstraintViolation, match='outcomes for 1 requests'):
        ledger.check_conservation()

def test_unconstrained_requests_all_succeed():
    params = TrafficParams(num_users=6, max_serving=3, max_queue=2)
    station = BaseStationState(0, params, num_channels=2)
    for request_id in range(5):
        station.admit(Request.new(request_id, request_id, 1.5, 0.0, float('inf')))
    ledger = RewardLedger()
    rng = np.random.default_rng(2)
    for slot in range(50):
        rates = rng.uniform(0.1, 0.6, station.n_r)
        _, completed = step_requests(station, rates, slot)
        for request, _ in completed:
            ledger.record(request)
    assert ledger.successes == 5 and ledger.failures == 0
