"""LSTM cell with gate order (input, forget, output, candidate) and BPTT over a sequence."""
import numpy as np

from slicing_lab.exceptions import ShapeMismatchError

from .activations import sigmoid
from .module import Module, uniform_init


class LSTMCell(Module):
    """W is (4h, in + h) acting on [x; h_prev]."""

    def __init__(self, input_size, hidden_size, rng):
        super().__init__()
        self.input_size = int(input_size)
        self.hidden_size = int(hidden_size)
        fan_in = self.input_size + self.hidden_size
        self.add_param('W', uniform_init(rng, fan_in, (4 * self.hidden_size, fan_in)))
        self.add_param('b', uniform_init(rng, fan_in, 4 * self.hidden_size))

    def zero_state(self):
        return np.zeros(self.hidden_size), np.zeros(self.hidden_size)

    def step(self, x, state=None):
        h_prev, c_prev = self.zero_state() if state is None else state
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.input_size,):
            raise ShapeMismatchError(f'input shape {x.shape} != ({self.input_size},)')
        if np.shape(h_prev) != (self.hidden_size,) or np.shape(c_prev) != (self.hidden_size,):
            raise ShapeMismatchError(f'state must be two vectors of length {self.hidden_size}')
        h = self.hidden_size
        xh = np.concatenate([x, h_prev])
        z = self.params['W'] @ xh + self.params['b']
        i, f, o = sigmoid(z[:h]), sigmoid(z[h:2 * h]), sigmoid(z[2 * h:3 * h])
        g = np.tanh(z[3 * h:])
        c = f * c_prev + i * g
        tanh_c = np.tanh(c)
        h_new = o * tanh_c
        self.push_cache((xh, c_prev, i, f, o, g, tanh_c))
        return h_new, (h_new, c)

    def backward_step(self, grad_h, grad_c):
        """Returns (d x, d h_prev, d c_prev)."""
        xh, c_prev, i, f, o, g, tanh_c = self.pop_cache()
        grad_o = grad_h * tanh_c
        grad_c = grad_c + grad_h * o * (1.0 - tanh_c ** 2)
        grad_i = grad_c * g
        grad_f = grad_c * c_prev
        grad_g = grad_c * i
        grad_z = np.concatenate([
            grad_i * i * (1.0 - i),
            grad_f * f * (1.0 - f),
            grad_o * o * (1.0 - o),
            grad_g * (1.0 - g ** 2),
        ])
        self.grads['W'] += np.outer(grad_z, xh)
        self.grads['b'] += grad_z
        grad_xh = self.params['W'].T @ grad_z
        return grad_xh[:self.input_size], grad_xh[self.input_size:], grad_c * f

    def run(self, inputs, state=None):
        outputs = []
        for x in inputs:
            out, state = self.step(x, state)
            outputs.append(out)
        if not outputs:
            raise ShapeMismatchError('empty input sequence')
        return np.array(outputs), state

    def backward_sequence(self, grad_outputs, grad_state=None):
        """BPTT through a sequence produced by run(); returns (d inputs, d initial state)."""
        grad_outputs = np.asarray(grad_outputs, dtype=np.float64)
        grad_h, grad_c = self.zero_state() if grad_state is None else grad_state
        grad_inputs = np.zeros((len(grad_outputs), self.input_size))
        for t in reversed(range(len(grad_outputs))):
            grad_x, grad_h, grad_c = self.backward_step(grad_outputs[t] + grad_h, grad_c)
            grad_inputs[t] = grad_x
        return grad_inputs, (grad_h, grad_c)
