import numpy as np
from scipy.special import expit, log_softmax as _log_softmax, softmax as _softmax


def relu(x):
    return np.maximum(x, 0.0)


def sigmoid(x):
    return expit(x)


def softmax(u, axis=-1):
    return _softmax(np.asarray(u, dtype=np.float64), axis=axis)


def log_softmax(u, axis=-1):
    return _log_softmax(np.asarray(u, dtype=np.float64), axis=axis)


def softmax_backward(probs, grad_probs, axis=-1):
    """d loss / d logits given d loss / d probs."""
    inner = np.sum(probs * grad_probs, axis=axis, keepdims=True)
    return probs * (grad_probs - inner)


def log_softmax_backward(probs, grad_log_probs, axis=-1):
    """d loss / d logits given d loss / d log-probs."""
    return grad_log_probs - probs * np.sum(grad_log_probs, axis=axis, keepdims=True)
