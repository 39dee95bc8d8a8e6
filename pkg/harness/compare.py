"""Comparison tables over finished runs, with the published reference cells alongside."""
import logging

import pandas as pd

from slicing_lab.exceptions import ConfigurationError, ScenarioMismatchError

logger = logging.getLogger(__name__)

# (average reward, completion %) per jammer kind, jammer power equal to the station power
JAMMER_TABLE = {
    'none': (19.47, 93.33),
    'last_interference': (14.82, 82.36),
    'next_interference': (11.67, 81.34),
    'max_rate': (11.03, 76.07),
    'actor_critic': (9.16, 73.89),
}

# same rows with the jammer 60 dB above the station power
JAMMER_TABLE_HIGH_POWER = {
    'last_interference': (7.23, 75.30),
    'next_interference': (3.83, 68.73),
    'max_rate': (3.61, 63.75),
    'actor_critic': (2.61, 60.62),
}

# (jammer ensemble, victim ensemble); 'none' is the run without a jammer
ENSEMBLE_TABLE = {
    ('none', 'single'): (19.90, 94.78),
    ('none', 'nespe'): (20.08, 95.23),
    ('none', 'ape'): (20.07, 95.16),
    ('single', 'single'): (10.09, 73.68),
    ('single', 'nespe'): (14.96, 84.90),
    ('single', 'ape'): (11.53, 77.04),
    ('nespe', 'single'): (9.68, 72.57),
    ('nespe', 'nespe'): (12.22, 78.76),
    ('nespe', 'ape'): (11.36, 76.92),
    ('ape', 'single'): (12.93, 80.26),
    ('ape', 'nespe'): (14.44, 83.55),
    ('ape', 'ape'): (13.23, 80.75),
}

ENSEMBLE_TABLE_HIGH_POWER = {
    ('single', 'single'): (3.58, 58.76),
    ('single', 'nespe'): (11.15, 76.52),
    ('single', 'ape'): (8.58, 70.33),
    ('nespe', 'single'): (2.25, 55.35),
    ('nespe', 'nespe'): (11.33, 76.81),
    ('nespe', 'ape'): (6.69, 66.19),
    ('ape', 'single'): (3.35, 58.09),
    ('ape', 'nespe'): (11.8, 77.72),
    ('ape', 'ape'): (9.44, 72.39),
}

TABLES = {
    'jammers': (('jammer', 'kind'), ('jammer', 'fixed_beta')),
    'ensembles': (('jammer', 'kind'), ('jammer_ensemble', 'kind'), ('victim_ensemble', 'kind')),
}

IGNORED = {'name', 'seed'}


def row_key(table, scenario):
    if table == 'jammers':
        return scenario['jammer']['kind']
    attacker = 'none' if scenario['jammer']['kind'] == 'none' else scenario['jammer_ensemble']['kind']
    return attacker, scenario['victim_ensemble']['kind']


def shared_part(table, scenario):
    """The scenario with the compared axis, the seed and the name removed."""
    shared = {key: value for key, value in scenario.items() if key not in IGNORED}
    for section, key in TABLES[table]:
        shared[section] = {k: v for k, v in shared[section].items() if k != key}
    if table == 'jammers':
        # the jammer block only matters once a jammer exists
        shared.pop('jammer')
        shared.pop('jammer_ensemble')
    return shared


def reference(table, key, high_power=False):
    """Published (reward, completion %) cell; the no-jammer row has no high-power variant."""
    cells, high = (ENSEMBLE_TABLE, ENSEMBLE_TABLE_HIGH_POWER) if table == 'ensembles' else (
        JAMMER_TABLE, JAMMER_TABLE_HIGH_POWER)
    if high_power and key in high:
        return high[key]
    return cells.get(key, (None, None))


def compare(table, runs, high_power=False):
    """runs: iterable of (scenario dict, summary dict). Rows average over seeds."""
    if table not in TABLES:
        raise ConfigurationError(f'unknown table {table!r}; expected one of {sorted(TABLES)}')
    runs = list(runs)
    if not runs:
        raise ConfigurationError('nothing to compare')
    baseline = shared_part(table, runs[0][0])
    for scenario, _ in runs[1:]:
        if shared_part(table, scenario) != baseline:
            raise ScenarioMismatchError(f'run {scenario["name"]!r} differs from {runs[0][0]["name"]!r} '
                                        f'outside the compared axis')
    rows = []
    for scenario, summary in runs:
        test = summary['test']
        rows.append({
            'row': row_key(table, scenario),
            'average_reward': test['average_reward'],
            'completion': 100.0 * test['completion_ratio'],
        })
    frame = pd.DataFrame(rows)
    frame['row'] = frame['row'].astype(str)
    grouped = frame.groupby('row', sort=False).agg(
        average_reward=('average_reward', 'mean'),
        completion=('completion', 'mean'),
        runs=('average_reward', 'size'),
    )
    keys = {str(row_key(table, scenario)): row_key(table, scenario) for scenario, _ in runs}
    grouped['reference_reward'] = [reference(table, keys[row], high_power)[0] for row in grouped.index]
    grouped['reference_completion'] = [reference(table, keys[row], high_power)[1] for row in grouped.index]
    logger.info('table %s over %d runs, %d rows', table, len(runs), len(grouped))
    return grouped.reset_index()
