"""Reduced-parameter pointer attention: u_k = v * sum(tanh(w1*e_k + w2*d))."""
import numpy as np

from slicing_lab.exceptions import ShapeMismatchError

from .activations import log_softmax_backward, softmax, softmax_backward
from .module import Module, uniform_init


class PointerAttention(Module):
    """w1, w2 are trainable vectors; v is a fixed scalar."""

    def __init__(self, hidden_size, rng, v=1.0):
        super().__init__()
        self.hidden_size = int(hidden_size)
        self.v = float(v)
        self.add_param('w1', uniform_init(rng, hidden_size, hidden_size))
        self.add_param('w2', uniform_init(rng, hidden_size, hidden_size))

    def scores(self, encoded, decoded):
        encoded = np.asarray(encoded, dtype=np.float64)
        if encoded.ndim != 2 or len(encoded) == 0:
            raise ShapeMismatchError('attention needs a non-empty (n, h) encoder matrix')
        if encoded.shape[1] != self.hidden_size or np.shape(decoded) != (self.hidden_size,):
            raise ShapeMismatchError(f'encoder/decoder width must be {self.hidden_size}')
        t = np.tanh(self.params['w1'] * encoded + self.params['w2'] * decoded)
        return self.v * t.sum(axis=1), t

    def forward(self, encoded, decoded):
        """Probability vector over the n encoded items."""
        u, t = self.scores(encoded, decoded)
        probs = softmax(u)
        self.push_cache((np.asarray(encoded, dtype=np.float64), np.asarray(decoded, dtype=np.float64), t, probs))
        return probs

    def backward(self, grad, wrt='probs'):
        """grad is d loss / d probs, or d loss / d log-probs with wrt='log_probs'.

        Returns (d encoded, d decoded).
        """
        encoded, decoded, t, probs = self.pop_cache()
        if wrt == 'log_probs':
            grad_u = log_softmax_backward(probs, grad)
        else:
            grad_u = softmax_backward(probs, grad)
        grad_pre = self.v * grad_u[:, None] * (1.0 - t ** 2)
        self.grads['w1'] += (grad_pre * encoded).sum(axis=0)
        self.grads['w2'] += grad_pre.sum(axis=0) * decoded
        grad_encoded = grad_pre * self.params['w1']
        grad_decoded = (grad_pre * self.params['w2']).sum(axis=0)
        return grad_encoded, grad_decoded
