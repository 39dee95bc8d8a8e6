"""Central finite-difference check of analytic gradients."""
import numpy as np


def gradient_check(module, loss_fn, num_coords=100, rng=None, step=1e-5, floor=1e-7):
    """Largest relative error between analytic and numerical gradients.

    loss_fn() runs a forward pass and returns (loss, backward) where backward()
    back-propagates that loss into ``module.grads``. Coordinates are drawn
    uniformly over all parameters.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    module.zero_grad()
    module.clear_cache()
    _, backward = loss_fn()
    backward()
    analytic = {name: grad.copy() for name, grad in module.named_gradients()}
    params = list(module.named_parameters())
    sizes = np.array([value.size for _, value in params])
    worst = 0.0
    for flat in rng.choice(sizes.sum(), size=min(num_coords, sizes.sum()), replace=False):
        which = int(np.searchsorted(np.cumsum(sizes), flat, side='right'))
        name, value = params[which]
        index = np.unravel_index(flat - (np.cumsum(sizes)[which] - sizes[which]), value.shape)
        original = value[index]
        value[index] = original + step
        plus, _ = loss_fn()
        value[index] = original - step
        minus, _ = loss_fn()
        value[index] = original
        module.clear_cache()
        numeric = (plus - minus) / (2 * step)
        exact = analytic[name][index]
        scale = abs(exact) + abs(numeric)
        if scale > floor:
            worst = max(worst, abs(exact - numeric) / scale)
    module.zero_grad()
    return worst
