"""Adam with bias correction over a Module's named parameters."""
import logging
from dataclasses import dataclass, field

import numpy as np

from slicing_lab.exceptions import ConfigurationError, ShapeMismatchError

logger = logging.getLogger(__name__)


@dataclass
class OptimizerState:
    learning_rate: float
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    step_count: int = 0
    first_moment: dict = field(default_factory=dict)
    second_moment: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.learning_rate <= 0:
            raise ConfigurationError('learning_rate must be positive')
        if not (0 <= self.beta1 < 1 and 0 <= self.beta2 < 1):
            raise ConfigurationError('Adam betas must lie in [0, 1)')

    def state_dict(self):
        state = {'step_count': np.array(self.step_count)}
        state.update({f'm.{name}': value for name, value in self.first_moment.items()})
        state.update({f'v.{name}': value for name, value in self.second_moment.items()})
        return state

    def load_state_dict(self, state):
        self.step_count = int(state['step_count'])
        self.first_moment = {k[2:]: np.array(v) for k, v in state.items() if k.startswith('m.')}
        self.second_moment = {k[2:]: np.array(v) for k, v in state.items() if k.startswith('v.')}


def optimizer_step(model, state, gradients=None):
    """Descend along the accumulated gradients (or the ``gradients`` dict given).

    Every call advances the step count. A zero gradient still moves the
    parameters along the first moment left by earlier steps.
    """
    params = dict(model.named_parameters())
    grads = dict(model.named_gradients()) if gradients is None else gradients
    for name, grad in grads.items():
        if name not in params or np.shape(grad) != params[name].shape:
            raise ShapeMismatchError(f'gradient {name} does not match any parameter')
    state.step_count += 1
    t = state.step_count
    for name, grad in grads.items():
        m = state.first_moment.setdefault(name, np.zeros_like(params[name]))
        v = state.second_moment.setdefault(name, np.zeros_like(params[name]))
        m *= state.beta1
        m += (1.0 - state.beta1) * grad
        v *= state.beta2
        v += (1.0 - state.beta2) * grad ** 2
        m_hat = m / (1.0 - state.beta1 ** t)
        v_hat = v / (1.0 - state.beta2 ** t)
        params[name] -= state.learning_rate * m_hat / (np.sqrt(v_hat) + state.eps)
    if not all(np.isfinite(value).all() for value in params.values()):
        logger.warning('non-finite parameters after Adam step %d', t)
