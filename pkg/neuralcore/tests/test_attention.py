import numpy as np
import pytest

from neuralcore.activations import softmax
from neuralcore.attention import PointerAttention
from neuralcore.gradcheck import gradient_check
from slicing_lab.exceptions import ShapeMismatchError


@pytest.fixture
def attention():
    return PointerAttention(6, np.random.default_rng(5))

# === Softmax ===

def test_softmax_arithmetic():
    assert softmax(np.array([0.0, np.log(3.0)])) == pytest.approx([0.25, 0.75], abs=1e-15)

def test_softmax_normalised_and_positive():
    rng = np.random.default_rng(0)
    for _ in range(50):
        probs = softmax(rng.standard_normal(rng.integers(1, 10)) * 30)
        assert abs(probs.sum() - 1.0) < 1e-12
        assert np.all(probs > 0)

# === Attention ===

def test_equal_scores_are_uniform(attention):
    encoded = np.tile(np.random.default_rng(1).standard_normal(6), (4, 1))
    probs = attention.forward(encoded, np.ones(6))
    assert probs == pytest.approx(np.full(4, 0.25))

def test_single_request_gets_everything(attention):
    assert attention.forward(np.ones((1, 6)), np.zeros(6)).tolist() == [1.0]

def test_empty_encoder_rejected(attention):
    with pytest.raises(ShapeMismatchError):
        attention.forward(np.zeros((0, 6)), np.zeros(6))

def test_score_formula(attention):
    rng = np.random.default_rng(2)
    encoded, decoded = rng.standard_normal((3, 6)), rng.standard_normal(6)
    u, _ = attention.scores(encoded, decoded)
    w1, w2 = attention.params['w1'], attention.params['w2']
    for k in range(3):
        assert u[k] == pytest.approx(np.tanh(w1 * encoded[k] + w2 * decoded).sum())

@pytest.mark.parametrize('wrt', ['probs', 'log_probs'])
def test_gradients_match_finite_differences(attention, wrt):
    rng = np.random.default_rng(3)
    encoded, decoded = rng.standard_normal((4, 6)), rng.standard_normal(6)
    weights = rng.standard_normal(4)

    def loss():
        probs = attention.forward(encoded, decoded)
        value = probs if wrt == 'probs' else np.log(probs)
        return float(weights @ value), lambda: attention.backward(weights, wrt=wrt)

    assert gradient_check(attention, loss, num_coords=12, rng=rng) < 1e-4

def test_input_gradients(attention):
    rng = np.random.default_rng(4)
    encoded, decoded = rng.standard_normal((3, 6)), rng.standard_normal(6)
    weights = rng.standard_normal(3)
    attention.forward(encoded, decoded)
    grad_encoded, grad_decoded = attention.backward(weights)
    step = 1e-6
    shifted = decoded.copy()
    shifted[2] += step
    plus = weights @ attention.forward(encoded, shifted)
    shifted[2] -= 2 * step
    minus = weights @ attention.forward(encoded, shifted)
    assert grad_decoded[2] == pytest.approx((plus - minus) / (2 * step), rel=1e-5, abs=1e-9)
    moved = encoded.copy()
    moved[1, 0] += step
    plus = weights @ attention.forward(moved, decoded)
    moved[1, 0] -= 2 * step
    minus = weights @ attention.forward(moved, decoded)
    assert grad_encoded[1, 0] == pytest.approx((plus - minus) / (2 * step), rel=1e-5, abs=1e-9)
