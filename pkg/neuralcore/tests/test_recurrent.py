import numpy as np
import pytest

from neuralcore.gradcheck import gradient_check
from neuralcore.recurrent import LSTMCell
from slicing_lab.exceptions import ShapeMismatchError


@pytest.fixture
def cell():
    return LSTMCell(3, 4, np.random.default_rng(11))


def reference_step(W, b, x, h_prev, c_prev):
    """Gate equations written out one gate at a time."""
    n = len(h_prev)
    xh = np.concatenate([x, h_prev])

    def gate(k):
        return W[k * n:(k + 1) * n] @ xh + b[k * n:(k + 1) * n]

    logistic = lambda z: 1.0 / (1.0 + np.exp(-z))
    input_gate = logistic(gate(0))
    forget_gate = logistic(gate(1))
    output_gate = logistic(gate(2))
    candidate = np.tanh(gate(3))
    c = forget_gate * c_prev + input_gate * candidate
    return output_gate * np.tanh(c), c

# === Recurrent step ===

def test_zero_parameters_zero_output(cell):
    cell.params['W'].fill(0.0)
    cell.params['b'].fill(0.0)
    out, (h, c) = cell.step(np.zeros(3), cell.zero_state())
    assert np.array_equal(out, np.zeros(4))
    assert np.array_equal(c, np.zeros(4))

def test_step_is_deterministic(cell):
    rng = np.random.default_rng(1)
    x, state = rng.standard_normal(3), (rng.standard_normal(4), rng.standard_normal(4))
    first, _ = cell.step(x, state)
    second, _ = cell.step(x, state)
    assert np.array_equal(first, second)

def test_matches_gate_equations(cell):
    rng = np.random.default_rng(2)
    x, h_prev, c_prev = rng.standard_normal(3), rng.standard_normal(4), rng.standard_normal(4)
    out, (_, c) = cell.step(x, (h_prev, c_prev))
    expected_h, expected_c = reference_step(cell.params['W'], cell.params['b'], x, h_prev, c_prev)
    assert np.max(np.abs(out - expected_h)) < 1e-10
    assert np.max(np.abs(c - expected_c)) < 1e-10

def test_bad_state_rejected(cell):
    with pytest.raises(ShapeMismatchError):
        cell.step(np.zeros(3), (np.zeros(5), np.zeros(5)))

# === Backpropagation through time ===

def test_sequence_gradients_match_finite_differences(cell):
    rng = np.random.default_rng(3)
    inputs = rng.standard_normal((4, 3))
    initial = (rng.standard_normal(4), rng.standard_normal(4))
    weights = rng.standard_normal((4, 4))
    final_weights = rng.standard_normal(4)

    def loss():
        outputs, (_, c) = cell.run(inputs, initial)
        value = float(np.sum(weights * outputs) + final_weights @ c)

        def backward():
            cell.backward_sequence(weights, (np.zeros(4), final_weights))

        return value, backward

    assert gradient_check(cell, loss, num_coords=100, rng=rng) < 1e-4

def test_input_gradient_matches_finite_differences(cell):
    rng = np.random.default_rng(4)
    inputs = rng.standard_normal((3, 3))
    weights = rng.standard_normal((3, 4))
    cell.zero_grad()
    cell.run(inputs)
    grad_inputs, _ = cell.backward_sequence(weights)
    step = 1e-5
    for t, i in [(0, 0), (1, 2), (2, 1)]:
        shifted = inputs.copy()
        shifted[t, i] += step
        plus = np.sum(weights * cell.run(shifted)[0])
        shifted[t, i] -= 2 * step
        minus = np.sum(weights * cell.run(shifted)[0])
        cell.clear_cache()
        assert grad_inputs[t, i] == pytest.approx((plus - minus) / (2 * step), rel=1e-5, abs=1e-9)
