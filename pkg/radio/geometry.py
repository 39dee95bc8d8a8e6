"""Positions of base stations, users and the jammer (km), plus coverage helpers."""
import logging
from dataclasses import dataclass, replace

import numpy as np

from slicing_lab.exceptions import GeometryError

logger = logging.getLogger(__name__)

KM = 1000.0

MAX_REJECTIONS = 10_000


@dataclass
class Geometry:
    bs_positions: np.ndarray          # (N_B, 2) km
    user_positions: np.ndarray        # (N_u, 2) km
    jammer_position: np.ndarray | None = None
    cell_radius: float = 2.5

    @property
    def num_stations(self):
        return len(self.bs_positions)

    @property
    def num_users(self):
        return len(self.user_positions)

    def with_users(self, user_positions):
        return replace(self, user_positions=user_positions)

    def with_jammer(self, position):
        return replace(self, jammer_position=np.asarray(position, dtype=float))

    def station_distances(self, point):
        return np.hypot(*(self.bs_positions - np.asarray(point, dtype=float)).T)

    def covering_stations(self, point):
        """Indices of covering stations, nearest first."""
        distances = self.station_distances(point)
        order = np.argsort(distances, kind='stable')
        return [int(b) for b in order if distances[b] <= self.cell_radius]

    def is_covered(self, point):
        return bool(np.any(self.station_distances(point) <= self.cell_radius))

    def bounding_box(self):
        low = self.bs_positions.min(axis=0) - self.cell_radius
        high = self.bs_positions.max(axis=0) + self.cell_radius
        return low, high

    def sample_covered_point(self, rng):
        """Uniform point over the union of coverage discs."""
        low, high = self.bounding_box()
        for _ in range(MAX_REJECTIONS):
            point = rng.uniform(low, high)
            if self.is_covered(point):
                return point
        raise GeometryError('could not sample a covered point')

    def validate(self):
        for u, point in enumerate(self.user_positions):
            if not self.is_covered(point):
                raise GeometryError(f'user {u} at {point} outside every coverage area')


def five_cell_layout(spacing=3.5):
    """Centre station plus four at (+-s, 0), (0, +-s)."""
    return np.array([
        [0.0, 0.0],
        [spacing, 0.0],
        [-spacing, 0.0],
        [0.0, spacing],
        [0.0, -spacing],
    ])


def station_layout(num_stations, spacing=3.5):
    if num_stations == 5:
        return five_cell_layout(spacing)
    if num_stations == 1:
        return np.zeros((1, 2))
    # ring around a centre station
    angles = 2 * np.pi * np.arange(num_stations - 1) / (num_stations - 1)
    ring = spacing * np.column_stack([np.cos(angles), np.sin(angles)])
    return np.vstack([np.zeros((1, 2)), ring])


def random_geometry(rng, num_stations, num_users, cell_radius, spacing=3.5, jammer_position=None):
    stations = station_layout(num_stations, spacing)
    geometry = Geometry(stations, np.zeros((0, 2)), None, cell_radius)
    users = np.array([geometry.sample_covered_point(rng) for _ in range(num_users)]).reshape(-1, 2)
    geometry = geometry.with_users(users)
    if jammer_position is not None:
        geometry = geometry.with_jammer(jammer_position)
    return geometry
