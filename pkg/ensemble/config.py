from dataclasses import dataclass

from slicing_lab.exceptions import ConfigurationError

ENSEMBLE_KINDS = ('single', 'nespe', 'ape')


@dataclass(frozen=True)
class EnsembleConfig:
    """E policies, L opponent classes, correlation threshold D and dual variable zeta."""

    kind: str = 'single'
    num_policies: int = 5            # E
    num_classes: int = 5             # L
    correlation_threshold: float = 0.0   # D
    dual: float = 0.1                # zeta, absolute
    capacity: int = 20
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in ENSEMBLE_KINDS:
            raise ConfigurationError(f'ensemble kind must be one of {ENSEMBLE_KINDS}, got {self.kind!r}')
        if self.num_policies < 1 or self.num_classes < 1:
            raise ConfigurationError('E and L must be >= 1')
        if self.dual < 0:
            raise ConfigurationError('zeta must be >= 0')
        if self.capacity < 1:
            raise ConfigurationError('history capacity must be >= 1')

    @property
    def policies(self):
        return 1 if self.kind == 'single' else self.num_policies
