"""Random-walk user mobility constrained to the coverage union."""
import numpy as np

MAX_ATTEMPTS = 100


def uniform_disk_step(rng, radius):
    r = radius * np.sqrt(rng.random())
    theta = 2 * np.pi * rng.random()
    return np.array([r * np.cos(theta), r * np.sin(theta)])


def move_users(geometry, rng, step_radius=0.05):
    """Displace each user uniformly within a disk; resample steps that leave coverage."""
    if step_radius == 0:
        return geometry
    positions = geometry.user_positions.copy()
    for u, position in enumerate(positions):
        for _ in range(MAX_ATTEMPTS):
            candidate = position + uniform_disk_step(rng, step_radius)
            if geometry.is_covered(candidate):
                positions[u] = candidate
                break
    return geometry.with_users(positions)
