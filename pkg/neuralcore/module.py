"""Parameter containers with a forward-cache stack and accumulated gradients."""
import numpy as np

from slicing_lab.exceptions import ShapeMismatchError, StaleCacheError


def uniform_init(rng, fan_in, shape):
    """U(-1/sqrt(fan_in), +1/sqrt(fan_in))."""
    bound = 1.0 / np.sqrt(fan_in)
    return rng.uniform(-bound, bound, shape)


class Module:
    """Base class for hand-differentiated models.

    Every forward pass pushes its activations onto a stack; backward pops them
    in reverse order and adds into ``grads``. Backward with nothing cached is a
    StaleCacheError.
    """

    def __init__(self):
        self.params = {}
        self.grads = {}
        self.children = {}
        self._caches = []

    def add_param(self, name, value):
        self.params[name] = np.asarray(value, dtype=np.float64)
        self.grads[name] = np.zeros_like(self.params[name])

    def add_child(self, name, module):
        self.children[name] = module
        return module

    def push_cache(self, cache):
        self._caches.append(cache)

    def pop_cache(self):
        if not self._caches:
            raise StaleCacheError(f'{type(self).__name__}.backward without a matching forward')
        return self._caches.pop()

    def clear_cache(self):
        self._caches.clear()
        for child in self.children.values():
            child.clear_cache()

    def named_parameters(self, prefix=''):
        for name, value in self.params.items():
            yield prefix + name, value
        for child_name, child in self.children.items():
            yield from child.named_parameters(f'{prefix}{child_name}.')

    def named_gradients(self, prefix=''):
        for name, value in self.grads.items():
            yield prefix + name, value
        for child_name, child in self.children.items():
            yield from child.named_gradients(f'{prefix}{child_name}.')

    def zero_grad(self):
        for grad in self.grads.values():
            grad.fill(0.0)
        for child in self.children.values():
            child.zero_grad()

    def state_dict(self):
        return {name: value.copy() for name, value in self.named_parameters()}

    def load_state_dict(self, state):
        own = dict(self.named_parameters())
        missing = set(own) - set(state)
        if missing:
            raise ShapeMismatchError(f'missing tensors: {sorted(missing)}')
        for name, value in own.items():
            incoming = np.asarray(state[name], dtype=np.float64)
            if incoming.shape != value.shape:
                raise ShapeMismatchError(f'{name}: shape {incoming.shape} != {value.shape}')
            value[...] = incoming

    def num_parameters(self):
        return sum(value.size for _, value in self.named_parameters())
