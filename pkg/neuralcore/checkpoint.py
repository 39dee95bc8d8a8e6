"""Named-tensor checkpoints as numpy .npz archives."""
import json
import logging
from pathlib import Path

import numpy as np

from slicing_lab.exceptions import ConfigurationError, ShapeMismatchError

logger = logging.getLogger(__name__)

META_KEY = '__meta__'


def save_checkpoint(path, modules, meta=None):
    """modules maps a prefix to a Module; tensors are stored as '<prefix>/<param>'."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    arrays = {
        f'{prefix}/{name}': value
        for prefix, module in modules.items()
        for name, value in module.named_parameters()
    }
    arrays[META_KEY] = np.array(json.dumps(meta or {}))
    np.savez(path, **arrays)
    logger.info('saved %d tensors to %s', len(arrays) - 1, path)
    return path


def load_checkpoint(path, modules):
    """Load tensors into the given modules in place; returns the metadata dict."""
    path = Path(path)
    if not path.exists():
        raise ConfigurationError(f'checkpoint {path} not found')
    with np.load(path, allow_pickle=False) as archive:
        meta = json.loads(str(archive[META_KEY])) if META_KEY in archive.files else {}
        for prefix, module in modules.items():
            state = {
                key.split('/', 1)[1]: archive[key]
                for key in archive.files if key.startswith(f'{prefix}/')
            }
            if not state:
                raise ShapeMismatchError(f'checkpoint {path} has no tensors for {prefix!r}')
            module.load_state_dict(state)
    return meta
