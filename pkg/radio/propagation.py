"""Path loss L = (dh^2 + dx^2 + dy^2)^(alpha/2), distances in meters."""
import numpy as np

from slicing_lab.exceptions import GeometryError

from .geometry import KM


def path_loss(src_xy, src_height, dst_xy, alpha, dst_height=0.0):
    """Linear gain between two points given in km with heights in m.

    Broadcasts over leading dimensions of src_xy / dst_xy.
    """
    if src_height < 0 or dst_height < 0:
        raise GeometryError('heights must be >= 0')
    delta = (np.asarray(src_xy, dtype=float) - np.asarray(dst_xy, dtype=float)) * KM
    squared = (src_height - dst_height) ** 2 + np.sum(delta * delta, axis=-1)
    if alpha != 0 and np.any(squared == 0):
        raise GeometryError('zero distance between transmitter and receiver')
    return np.power(squared, alpha / 2.0)


def station_user_loss(geometry, params):
    """(N_B, N_u) matrix of L^{b,u}."""
    return path_loss(
        geometry.bs_positions[:, None, :], params.bs_height,
        geometry.user_positions[None, :, :], params.path_loss_exponent,
    )


def jammer_user_loss(geometry, params):
    """(N_u,) vector of L^{J,u}."""
    return path_loss(
        geometry.jammer_position[None, :], params.jammer_height,
        geometry.user_positions, params.path_loss_exponent,
    )


def station_jammer_loss(geometry, params):
    """(N_B,) vector of L^{b,J}; heights enter as h_B - h_J."""
    return path_loss(
        geometry.bs_positions, params.bs_height,
        geometry.jammer_position[None, :], params.path_loss_exponent,
        dst_height=params.jammer_height,
    )
