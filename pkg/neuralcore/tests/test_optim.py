import numpy as np
import pytest

from neuralcore.checkpoint import load_checkpoint, save_checkpoint
from neuralcore.feedforward import FeedForward
from neuralcore.optim import OptimizerState, optimizer_step
from slicing_lab.exceptions import ConfigurationError, ShapeMismatchError


def train(seed, steps=5):
    rng = np.random.default_rng(seed)
    net = FeedForward([3, 4, 1], rng)
    state = OptimizerState(learning_rate=1e-2)
    for _ in range(steps):
        net.zero_grad()
        out = net.forward(rng.standard_normal(3))
        net.backward(out - 1.0)
        optimizer_step(net, state)
    return net

# === Adam ===

def test_zero_gradient_leaves_parameters():
    net = FeedForward([2, 3, 1], np.random.default_rng(0))
    before = net.state_dict()
    state = OptimizerState(learning_rate=0.1)
    optimizer_step(net, state)
    assert state.step_count == 1
    for name, value in net.named_parameters():
        assert np.array_equal(value, before[name])

def test_zero_gradient_step_keeps_momentum():
    net = FeedForward([2, 2], np.random.default_rng(0))
    state = OptimizerState(learning_rate=1e-2)
    net.grads['W0'][...] = 1.0
    optimizer_step(net, state)
    after_first = net.params['W0'].copy()
    m_before = state.first_moment['W0'].copy()
    net.zero_grad()
    optimizer_step(net, state)
    assert state.step_count == 2
    assert np.all(net.params['W0'] < after_first)
    assert state.first_moment['W0'] == pytest.approx(0.9 * m_before)

def test_first_step_moves_by_learning_rate():
    net = FeedForward([2, 2], np.random.default_rng(0))
    before = net.state_dict()
    net.grads['W0'][...] = np.array([[3.0, -0.5], [1e-3, -20.0]])
    net.grads['b0'][...] = np.array([2.0, -2.0])
    optimizer_step(net, OptimizerState(learning_rate=1e-3))
    delta = net.params['W0'] - before['W0']
    assert delta == pytest.approx(-1e-3 * np.sign(net.grads['W0']), rel=1e-4)

def test_identical_seeds_identical_trajectories():
    first, second = train(3), train(3)
    for (name, a), (_, b) in zip(first.named_parameters(), second.named_parameters()):
        assert np.array_equal(a, b), name

def test_invalid_learning_rate():
    with pytest.raises(ConfigurationError):
        OptimizerState(learning_rate=0.0)

# === Checkpoints ===

def test_checkpoint_restores_parameters(tmp_path):
    trained = train(1)
    path = save_checkpoint(tmp_path / 'actor.npz', {'actor': trained}, meta={'slot': 5})
    fresh = FeedForward([3, 4, 1], np.random.default_rng(99))
    meta = load_checkpoint(path, {'actor': fresh})
    assert meta == {'slot': 5}
    for (_, a), (_, b) in zip(trained.named_parameters(), fresh.named_parameters()):
        assert np.array_equal(a, b)

def test_checkpoint_shape_mismatch(tmp_path):
    path = save_checkpoint(tmp_path / 'actor.npz', {'actor': FeedForward([3, 4, 1], np.random.default_rng(0))})
    with pytest.raises(ShapeMismatchError):
        load_checkpoint(path, {'actor': FeedForward([3, 5, 1], np.random.default_rng(0))})
