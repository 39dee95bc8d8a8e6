"""Maximin mixed strategies of two-player zero-sum matrix games.

The row player maximises, the column player minimises. Small games are solved
exactly by enumerating square supports; each candidate is accepted only with a
primal/dual certificate. ``scipy.optimize.linprog`` covers the rest.
"""
import logging
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.optimize import linprog

from slicing_lab.exceptions import ShapeMismatchError

logger = logging.getLogger(__name__)

ENUMERATION_LIMIT = 8
TOLERANCE = 1e-9


@dataclass
class MixedStrategy:
    sigma: np.ndarray
    value: float
    column: np.ndarray | None = None
    upper: float | None = None


def _check(payoff):
    payoff = np.asarray(payoff, dtype=np.float64)
    if payoff.ndim != 2 or 0 in payoff.shape:
        raise ShapeMismatchError(f'payoff must be a non-empty matrix, got shape {payoff.shape}')
    if not np.all(np.isfinite(payoff)):
        raise ShapeMismatchError('payoff entries must be finite')
    return payoff


def guaranteed_value(payoff, sigma):
    return float((sigma @ payoff).min())


def _equalizer(block):
    """Weights x >= 0 on the block rows with x^T block constant; returns (x, v) or None."""
    k = block.shape[0]
    system = np.zeros((k + 1, k + 1))
    system[:k, :k] = block.T
    system[:k, k] = -1.0
    system[k, :k] = 1.0
    rhs = np.zeros(k + 1)
    rhs[k] = 1.0
    try:
        solution = np.linalg.solve(system, rhs)
    except np.linalg.LinAlgError:
        return None
    weights = solution[:k]
    if np.any(weights < -TOLERANCE):
        return None
    return np.clip(weights, 0.0, None), solution[k]


def support_enumeration(payoff):
    rows, cols = payoff.shape
    for size in range(1, min(rows, cols) + 1):
        for support in combinations(range(rows), size):
            for against in combinations(range(cols), size):
                block = payoff[np.ix_(support, against)]
                row_side = _equalizer(block)
                column_side = _equalizer(-block.T)
                if row_side is None or column_side is None:
                    continue
                sigma = np.zeros(rows)
                sigma[list(support)] = row_side[0]
                column = np.zeros(cols)
                column[list(against)] = column_side[0]
                lower = guaranteed_value(payoff, sigma)
                upper = float((payoff @ column).max())
                if lower >= upper - TOLERANCE:
                    return MixedStrategy(sigma / sigma.sum(), lower, column / column.sum(), upper)
    return None


def solve_by_linprog(payoff):
    """max v s.t. sigma^T U >= v, sum sigma = 1, sigma >= 0."""
    rows, cols = payoff.shape
    objective = np.zeros(rows + 1)
    objective[-1] = -1.0
    inequalities = np.hstack([-payoff.T, np.ones((cols, 1))])
    equalities = np.hstack([np.ones((1, rows)), np.zeros((1, 1))])
    bounds = [(0.0, None)] * rows + [(None, None)]
    result = linprog(objective, A_ub=inequalities, b_ub=np.zeros(cols), A_eq=equalities, b_eq=[1.0],
                     bounds=bounds, method='highs')
    sigma = np.clip(result.x[:rows], 0.0, None)
    sigma /= sigma.sum()
    return MixedStrategy(sigma, guaranteed_value(payoff, sigma))


def solve_zero_sum(payoff):
    """Maximin strategy of the row player; ties among optimal strategies are resolved arbitrarily."""
    payoff = _check(payoff)
    if max(payoff.shape) <= ENUMERATION_LIMIT:
        strategy = support_enumeration(payoff)
        if strategy is not None:
            return strategy
        logger.debug('no certified square support for a %dx%d game, using linprog', *payoff.shape)
    return solve_by_linprog(payoff)


def fictitious_play(payoff, iterations=20_000):
    """Iterated best responses; the returned value is the midpoint of the bracket [lower, upper]
    that always contains the game value."""
    payoff = _check(payoff)
    rows, cols = payoff.shape
    row_counts = np.zeros(rows)
    column_counts = np.zeros(cols)
    row_payoffs = np.zeros(cols)       # cumulative sigma^T U of the row history
    column_payoffs = np.zeros(rows)    # cumulative U y of the column history
    row, column = 0, 0
    for _ in range(iterations):
        row_counts[row] += 1
        column_counts[column] += 1
        row_payoffs += payoff[row]
        column_payoffs += payoff[:, column]
        row = int(np.argmax(column_payoffs))
        column = int(np.argmin(row_payoffs))
    sigma = row_counts / iterations
    lower = guaranteed_value(payoff, sigma)
    upper = float((payoff @ (column_counts / iterations)).max())
    return MixedStrategy(sigma, 0.5 * (lower + upper), column_counts / iterations, upper)
