"""ActionMatrix helpers: binary n_r x N channel-to-request assignment of one base station."""
import numpy as np

from slicing_lab.exceptions import ConstraintViolation

from radio.environment import IDLE


def empty_action(num_requests, num_channels):
    return np.zeros((num_requests, num_channels), dtype=np.int8)


def check_action(action, num_requests, num_channels, max_channels):
    """Disjoint channel sets and n_c = |union C_k| <= N_c."""
    action = np.asarray(action)
    if action.shape != (num_requests, num_channels):
        raise ConstraintViolation(f'action shape {action.shape} != {(num_requests, num_channels)}')
    if not np.isin(action, (0, 1)).all():
        raise ConstraintViolation('action entries must be binary')
    if (action.sum(axis=0) > 1).any():
        raise ConstraintViolation('a channel is shared by two requests at one station')
    if action.sum() > max_channels:
        raise ConstraintViolation(f'{int(action.sum())} channels used, limit {max_channels}')


def plan_row(action, users, num_channels):
    """Per-channel served user (or IDLE) for one station."""
    row = np.full(num_channels, IDLE, dtype=int)
    for k, user in enumerate(users):
        row[np.asarray(action[k]) == 1] = user
    return row


def request_rates(action, rates_row):
    """Sum rate r_k over each request's channel set."""
    return np.asarray(action, dtype=float) @ np.asarray(rates_row, dtype=float)
