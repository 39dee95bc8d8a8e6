"""Request generation, cooldown gating and station assignment."""
import logging

from .requests import Request, RequestStatus

logger = logging.getLogger(__name__)


def draw_request(rng, params, request_id, user, slot):
    """p ~ U(p range), m ~ U(m range), l = p/m + U(slack range)."""
    payload = rng.uniform(*params.payload_range)
    min_rate = rng.uniform(*params.min_rate_range)
    lifetime = payload / min_rate + rng.uniform(*params.lifetime_slack) if min_rate > 0 else float('inf')
    return Request.new(request_id, user, payload, min_rate, lifetime, slot)


def assign(request, stations, geometry):
    """Nearest covering station with room, else the next nearest; False if all are full."""
    for b in geometry.covering_stations(geometry.user_positions[request.user]):
        if stations[b].admit(request):
            return True
    return False


def arrivals(rng, model, geometry, slot):
    """One slot of arrivals for every eligible user; returns (admitted, denied)."""
    params = model.params
    admitted, denied = [], []
    for user in range(params.num_users):
        if model.active[user] or slot < model.ready_at[user]:
            continue
        if rng.random() >= params.arrival_probability:
            continue
        request = draw_request(rng, params, model.next_id(), user, slot)
        if assign(request, model.stations, geometry):
            model.active[user] = True
            admitted.append(request)
        else:
            request.move_to(RequestStatus.DENIED)
            request.end_slot = slot
            model.ready_at[user] = slot + 1 + params.cooldown
            denied.append(request)
    if denied:
        logger.debug('slot %d: %d requests denied service', slot, len(denied))
    return admitted, denied
