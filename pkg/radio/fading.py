"""First-order complex Gauss-Markov (Jakes) fading for every link kind."""
import logging
from dataclasses import dataclass

import numpy as np
from scipy.special import j0

logger = logging.getLogger(__name__)

LINK_KINDS = ('bs_ue', 'jam_ue', 'bs_jam')


def jakes_correlation(doppler, slot_duration):
    """rho = J0(2 pi f_d T)."""
    return float(j0(2.0 * np.pi * doppler * slot_duration))


def complex_gaussian(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


@dataclass
class FadingField:
    """Coefficients indexed by link kind.

    bs_ue  -- (N_B, N_u, N)  base station -> user
    jam_ue -- (N_u, N)       jammer -> user
    bs_jam -- (N_B, N)       base station -> jammer
    """

    bs_ue: np.ndarray
    jam_ue: np.ndarray
    bs_jam: np.ndarray
    rho: float

    def __post_init__(self):
        if not 0.0 <= self.rho <= 1.0:
            raise ValueError(f'rho must lie in [0, 1], got {self.rho}')

    @classmethod
    def stationary(cls, rng, num_stations, num_users, num_channels, rho):
        return cls(
            bs_ue=complex_gaussian(rng, (num_stations, num_users, num_channels)),
            jam_ue=complex_gaussian(rng, (num_users, num_channels)),
            bs_jam=complex_gaussian(rng, (num_stations, num_channels)),
            rho=rho,
        )

    def copy(self):
        return FadingField(self.bs_ue.copy(), self.jam_ue.copy(), self.bs_jam.copy(), self.rho)

    def power(self, kind):
        return np.abs(getattr(self, kind)) ** 2


def evolve_fading(field, rng):
    """Advance one T-slot: h' = rho h + sqrt(1 - rho^2) e, e ~ CN(0, 1).

    Innovations are drawn for every link kind, in a fixed order, whether or not
    a jammer is deployed, so the victim links see the same random stream either way.
    """
    rho = field.rho
    scale = np.sqrt(max(1.0 - rho * rho, 0.0))
    evolved = {}
    for kind in LINK_KINDS:
        h = getattr(field, kind)
        evolved[kind] = rho * h + scale * complex_gaussian(rng, h.shape)
    return FadingField(rho=rho, **evolved)
