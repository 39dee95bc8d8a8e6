"""Actor and critic networks of the slicing agents."""
import numpy as np

from neuralcore.activations import log_softmax_backward, softmax
from neuralcore.attention import PointerAttention
from neuralcore.feedforward import FeedForward
from neuralcore.module import Module
from neuralcore.recurrent import LSTMCell
from slicing_lab.exceptions import ShapeMismatchError
from traffic.requests import INFO_SIZE

from .observation import flat_size


class PointerActor(Module):
    """Encoder LSTM over serving requests, decoder LSTM over channels, attention per channel.

    The encoder's initial (h, c) comes from a single affine layer over the padded
    queue information.
    """

    def __init__(self, num_channels, max_serving, max_queue, hidden_size, rng, v=1.0):
        super().__init__()
        self.num_channels = num_channels
        self.max_serving = max_serving
        self.max_queue = max_queue
        self.hidden_size = hidden_size
        queue_width = max(INFO_SIZE * max_queue, 1)
        self.initial_state = self.add_child('initial_state', FeedForward([queue_width, 2 * hidden_size], rng))
        self.encoder = self.add_child('encoder', LSTMCell(2 * num_channels + INFO_SIZE, hidden_size, rng))
        self.decoder = self.add_child('decoder', LSTMCell(INFO_SIZE * max_serving + max_serving, hidden_size, rng))
        self.attention = self.add_child('attention', PointerAttention(hidden_size, rng, v=v))

    def _queue_input(self, observation):
        if self.max_queue == 0:
            return np.zeros(1)
        return observation.queue_vector()

    def forward(self, observation):
        """P with P[k, c] = probability that channel c goes to request k; columns sum to 1."""
        if observation.n_r == 0:
            raise ShapeMismatchError('actor called on an idle station')
        h = self.hidden_size
        state = self.initial_state.forward(self._queue_input(observation))
        encoded, final = self.encoder.run(observation.encoder_inputs(), (state[:h], state[h:]))
        decoded, _ = self.decoder.run(observation.decoder_inputs(), final)
        probs = np.column_stack([self.attention.forward(encoded, d) for d in decoded])
        self.push_cache((encoded.shape, decoded.shape))
        return probs

    def backward(self, grad_log_probs):
        """Back-propagate d loss / d log P (n_r, N) through attention, decoder, encoder, initial state."""
        encoded_shape, decoded_shape = self.pop_cache()
        grad_encoded = np.zeros(encoded_shape)
        grad_decoded = np.zeros(decoded_shape)
        for c in reversed(range(decoded_shape[0])):
            g_enc, g_dec = self.attention.backward(grad_log_probs[:, c], wrt='log_probs')
            grad_encoded += g_enc
            grad_decoded[c] = g_dec
        _, grad_final = self.decoder.backward_sequence(grad_decoded)
        _, (grad_h0, grad_c0) = self.encoder.backward_sequence(grad_encoded, grad_final)
        self.initial_state.backward(np.concatenate([grad_h0, grad_c0]))


class FnnActor(Module):
    """Feed-forward actor over the padded O_b; N_r x N logits softmaxed per channel over live rows."""

    def __init__(self, num_channels, max_serving, max_queue, hidden, rng):
        super().__init__()
        self.num_channels = num_channels
        self.max_serving = max_serving
        sizes = [flat_size(num_channels, max_serving, max_queue), *hidden, max_serving * num_channels]
        self.net = self.add_child('net', FeedForward(sizes, rng))

    def forward(self, observation):
        n = observation.n_r
        if n == 0:
            raise ShapeMismatchError('actor called on an idle station')
        logits = self.net.forward(observation.flat()).reshape(self.max_serving, self.num_channels)
        probs = softmax(logits[:n], axis=0)
        self.push_cache(probs)
        return probs

    def backward(self, grad_log_probs):
        probs = self.pop_cache()
        grad_logits = np.zeros((self.max_serving, self.num_channels))
        grad_logits[:len(probs)] = log_softmax_backward(probs, grad_log_probs, axis=0)
        self.net.backward(grad_logits.ravel())


class Critic(Module):
    """g^phi: one ReLU hidden layer, scalar value."""

    def __init__(self, input_size, hidden_size, rng):
        super().__init__()
        self.net = self.add_child('net', FeedForward([input_size, hidden_size, 1], rng))

    def forward(self, x):
        return float(self.net.forward(x)[0])

    def backward(self, grad_value):
        self.net.backward(np.array([grad_value]))

    def value(self, x):
        out = self.forward(x)
        self.net.pop_cache()
        return out


def make_actor(params, num_channels, max_serving, max_queue, rng):
    if params.actor == 'fnn':
        return FnnActor(num_channels, max_serving, max_queue, params.fnn_hidden, rng)
    return PointerActor(num_channels, max_serving, max_queue, params.encoder_hidden, rng, v=params.attention_v)
