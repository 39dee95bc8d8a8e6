import numpy as np
import pytest

from radio.propagation import path_loss
from slicing_lab.exceptions import GeometryError

# === Path loss ===

def test_height_only_distance():
    assert path_loss([0.0, 0.0], 50.0, [0.0, 0.0], -2.0) == pytest.approx(4.0e-4)

def test_zero_exponent_is_unity():
    assert path_loss([0.0, 0.0], 50.0, [1.3, -2.2], 0.0) == pytest.approx(1.0)

def test_equal_heights_cancel():
    expected = ((1000.0 ** 2 + 2000.0 ** 2)) ** (-1.0)
    assert path_loss([0.0, 0.0], 10.0, [1.0, 2.0], -2.0, dst_height=10.0) == pytest.approx(expected)

def test_symmetry_with_equal_heights():
    a, b = np.array([0.3, -1.1]), np.array([2.0, 0.4])
    assert path_loss(a, 7.0, b, -3.0, dst_height=7.0) == pytest.approx(path_loss(b, 7.0, a, -3.0, dst_height=7.0))

def test_zero_distance_is_singular():
    with pytest.raises(GeometryError):
        path_loss([1.0, 1.0], 5.0, [1.0, 1.0], -2.0, dst_height=5.0)

def test_broadcasts_over_positions():
    stations = np.array([[0.0, 0.0], [1.0, 0.0]])
    users = np.array([[0.0, 0.0], [0.0, 1.0], [2.0, 0.0]])
    loss = path_loss(stations[:, None, :], 50.0, users[None, :, :], -2.0)
    assert loss.shape == (2, 3)
    assert loss[0, 0] == pytest.approx(4.0e-4)
