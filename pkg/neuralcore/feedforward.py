"""Fully connected network: ReLU hidden layers, linear or sigmoid output."""
import numpy as np

from slicing_lab.exceptions import ConfigurationError, ShapeMismatchError

from .activations import relu, sigmoid
from .module import Module, uniform_init

OUTPUTS = ('linear', 'sigmoid')


class FeedForward(Module):

    def __init__(self, sizes, rng, output='linear'):
        super().__init__()
        if len(sizes) < 2 or min(sizes) < 1:
            raise ConfigurationError(f'layer sizes {sizes} need an input and an output of width >= 1')
        if output not in OUTPUTS:
            raise ConfigurationError(f'output must be one of {OUTPUTS}, got {output!r}')
        self.sizes = tuple(int(size) for size in sizes)
        self.output = output
        for i, (fan_in, fan_out) in enumerate(zip(self.sizes[:-1], self.sizes[1:])):
            self.add_param(f'W{i}', uniform_init(rng, fan_in, (fan_out, fan_in)))
            self.add_param(f'b{i}', uniform_init(rng, fan_in, fan_out))

    @property
    def num_layers(self):
        return len(self.sizes) - 1

    def forward(self, x):
        """x is (in,) or (batch, in); output keeps the leading shape."""
        x = np.asarray(x, dtype=np.float64)
        if x.shape[-1:] != (self.sizes[0],):
            raise ShapeMismatchError(f'input width {x.shape[-1:]} != {self.sizes[0]}')
        single = x.ndim == 1
        a = np.atleast_2d(x)
        activations, pre = [a], []
        for i in range(self.num_layers):
            z = a @ self.params[f'W{i}'].T + self.params[f'b{i}']
            pre.append(z)
            if i < self.num_layers - 1:
                a = relu(z)
            elif self.output == 'sigmoid':
                a = sigmoid(z)
            else:
                a = z
            activations.append(a)
        self.push_cache((activations, pre, single))
        return a[0] if single else a

    def backward(self, grad_output):
        """Accumulate parameter gradients; return d loss / d input."""
        activations, pre, single = self.pop_cache()
        g = np.atleast_2d(np.asarray(grad_output, dtype=np.float64))
        if g.shape != activations[-1].shape:
            raise ShapeMismatchError(f'upstream gradient {g.shape} != output {activations[-1].shape}')
        if self.output == 'sigmoid':
            y = activations[-1]
            g = g * y * (1.0 - y)
        for i in reversed(range(self.num_layers)):
            self.grads[f'W{i}'] += g.T @ activations[i]
            self.grads[f'b{i}'] += g.sum(axis=0)
            g = g @ self.params[f'W{i}']
            if i > 0:
                g = g * (pre[i - 1] > 0)
        return g[0] if single else g
