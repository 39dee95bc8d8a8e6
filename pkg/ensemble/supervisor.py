"""Policy selection for NesPE and APE, and the correlation-penalised dual reward."""
import logging

import numpy as np

from .history import UtilityHistory
from .nash import MixedStrategy, solve_zero_sum

logger = logging.getLogger(__name__)


def dual_reward(utility, sigma, correlations, policy, zeta):
    """R(e') = u - zeta * sum_{e'' != e'} sigma_e'' rho(e', e'')."""
    sigma = np.asarray(sigma, dtype=np.float64)
    row = np.asarray(correlations, dtype=np.float64).copy()
    row[policy] = 0.0
    return float(utility) - zeta * float(sigma @ row)


class EnsembleSupervisor:
    """Keeps H and draws the executing policy e_hat.

    nespe -- e_hat ~ sigma, the maximin strategy of the averaged history;
    ape   -- e_hat uniform;
    single -- always policy 0.
    """

    def __init__(self, config, num_classes, rng):
        self.config = config
        self.kind = config.kind
        self.size = config.policies
        self.rng = rng
        self.history = UtilityHistory(self.size, num_classes, config.capacity, rng)
        self.strategy = MixedStrategy(np.full(self.size, 1.0 / self.size), 0.0)
        self.selections = np.zeros(self.size, dtype=int)

    @property
    def sigma(self):
        return self.strategy.sigma

    def select(self):
        if self.kind == 'nespe' and self.size > 1:
            self.strategy = solve_zero_sum(self.history.averages())
            sigma = np.clip(self.strategy.sigma, 0.0, None)
            policy = int(self.rng.choice(self.size, p=sigma / sigma.sum()))
        elif self.kind == 'ape':
            policy = int(self.rng.integers(self.size))
        else:
            policy = 0
        self.selections[policy] += 1
        return policy

    def record(self, policy, label, utility):
        self.history.append(policy, label, utility)

    def rewards(self, policy, batch):
        """Dual rewards of ``policy`` for a batch of records carrying sigma and the correlation matrix."""
        return [
            dual_reward(record.reward, record.extra['sigma'], record.extra['correlation'][policy], policy,
                        self.config.dual)
            for record in batch
        ]

    def slack(self, correlations):
        """Mean off-diagonal correlation minus D; positive when policies overlap more than allowed."""
        if self.size < 2:
            return 0.0
        off = correlations[~np.eye(self.size, dtype=bool)]
        return float(off.mean()) - self.config.correlation_threshold

    def snapshot(self):
        return {
            'sigma': self.sigma.tolist(),
            'value': float(self.strategy.value),
            'averages': self.history.averages().tolist(),
            'lengths': self.history.lengths().tolist(),
        }
