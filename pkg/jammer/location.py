"""Monte Carlo grid search for the jammer position that minimises the expected jammed sum rate."""
import logging
from dataclasses import dataclass

import numpy as np

from radio.propagation import path_loss
from slicing_lab.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

GRID_PITCH = 0.25  # km


@dataclass
class LocationResult:
    position: np.ndarray
    objective: float
    candidates: np.ndarray
    objectives: np.ndarray


def candidate_grid(geometry, pitch=GRID_PITCH):
    """Square grid over the station bounding box, centred on the station centroid."""
    centre = geometry.bs_positions.mean(axis=0)
    half = np.abs(geometry.bs_positions - centre).max(axis=0)
    steps = [np.arange(-np.floor(h / pitch), np.floor(h / pitch) + 1) * pitch for h in half]
    xs, ys = np.meshgrid(centre[0] + steps[0], centre[1] + steps[1], indexing='ij')
    return np.column_stack([xs.ravel(), ys.ravel()])


def station_samples(geometry, params, users, station_gain):
    """Per-sample station->user loss and its coverage mask, shared by every candidate."""
    loss = path_loss(
        geometry.bs_positions[None, :, :], params.bs_height, users[:, None, :], params.path_loss_exponent,
    )
    distances = np.hypot(*(geometry.bs_positions[None, :, :] - users[:, None, :]).transpose(2, 0, 1))
    covered = distances <= geometry.cell_radius
    signal = params.bs_power * loss * station_gain
    return signal, covered


def expected_jammed_rate(candidate, users, signal, covered, jammer_gain, params, num_channels):
    """E[sum_c max_b r_{c,J}^{b,u}] with every indicator set to one and no inter-cell interference."""
    jam_loss = path_loss(candidate[None, :], params.jammer_height, users, params.path_loss_exponent)
    jamming = params.jam_power * jam_loss * jammer_gain
    rate = np.log2(1.0 + signal / (jamming[:, None] + 1.0))
    best = np.where(covered, rate, -np.inf).max(axis=1)
    return num_channels * float(best.mean())


def optimize_location(geometry, params, mc_samples, rng, pitch=GRID_PITCH, candidates=None):
    """Arg-min over candidate positions; every candidate sees the same fading and user draws."""
    candidates = candidate_grid(geometry, pitch) if candidates is None else np.asarray(candidates, dtype=float)
    if len(candidates) == 0:
        raise ConfigurationError('no candidate jammer positions')
    users = np.array([geometry.sample_covered_point(rng) for _ in range(mc_samples)])
    station_gain = rng.exponential(1.0, (mc_samples, geometry.num_stations))
    jammer_gain = rng.exponential(1.0, mc_samples)
    signal, covered = station_samples(geometry, params, users, station_gain)
    objectives = np.array([
        expected_jammed_rate(candidate, users, signal, covered, jammer_gain, params, params.num_channels)
        for candidate in candidates
    ])
    best = int(np.argmin(objectives))
    logger.info('jammer location %s, expected jammed sum rate %.4f over %d candidates',
                candidates[best], objectives[best], len(candidates))
    return LocationResult(candidates[best].copy(), float(objectives[best]), candidates, objectives)
