"""Per-slot metric stream, per-request outcomes and the run summary."""
import json
import logging
from pathlib import Path

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)

TRAIN = 'train'
TEST = 'test'


class MetricsRecorder:
    """Append-only rows; frames are built on demand."""

    def __init__(self, moving_average=500):
        self.moving_average = moving_average
        self.rows = []
        self.snapshots = []

    def add(self, row):
        self.rows.append(row)

    def snapshot(self, slot, phase, state):
        self.snapshots.append({'slot': slot, 'phase': phase, **state})

    def slots(self):
        frame = pd.DataFrame(self.rows)
        if not frame.empty:
            frame['reward_ma'] = frame['reward'].rolling(self.moving_average, min_periods=1).mean()
        return frame


def outcome_frame(ledger, train_slots):
    frame = pd.DataFrame(ledger.outcomes)
    if frame.empty:
        return pd.DataFrame(columns=['request', 'station', 'user', 'status', 'reward', 'initial_payload',
                                     'arrival_slot', 'end_slot', 'phase'])
    frame['phase'] = np.where(frame['end_slot'] < train_slots, TRAIN, TEST)
    return frame


def completion_ratio(outcomes):
    """successes / (successes + failures); denials do not count."""
    successes = int((outcomes['status'] == 'success').sum())
    failures = int((outcomes['status'] == 'failed').sum())
    resolved = successes + failures
    return successes / resolved if resolved else 0.0


def phase_summary(slots, outcomes, phase):
    rows = slots[slots['phase'] == phase] if not slots.empty else slots
    done = outcomes[outcomes['phase'] == phase]
    resolved = done[done['status'].isin(['success', 'failed'])]
    per_station = {
        int(station): completion_ratio(group) for station, group in resolved.groupby('station')
    }
    return {
        'slots': int(len(rows)),
        'average_reward': float(rows['reward'].mean()) if len(rows) else 0.0,
        'completion_ratio': completion_ratio(done),
        'successes': int((done['status'] == 'success').sum()),
        'failures': int((done['status'] == 'failed').sum()),
        'denials': int((done['status'] == 'denied').sum()),
        'per_station_completion': per_station,
    }


def summarize(recorder, ledger, train_slots, extra=None):
    slots = recorder.slots()
    outcomes = outcome_frame(ledger, train_slots)
    summary = {phase: phase_summary(slots, outcomes, phase) for phase in (TRAIN, TEST)}
    summary['total_reward'] = ledger.total_reward
    summary.update(extra or {})
    return summary


def write_outputs(directory, recorder, ledger, train_slots, summary, scenario=None, trace=None):
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    recorder.slots().to_csv(directory / 'metrics.csv', index=False)
    outcome_frame(ledger, train_slots).to_csv(directory / 'outcomes.csv', index=False)
    if trace:
        pd.DataFrame(trace).to_csv(directory / 'jammer_trace.csv', index=False)
    if recorder.snapshots:
        with open(directory / 'ensemble.json', 'w') as handle:
            json.dump(recorder.snapshots, handle)
    with open(directory / 'summary.json', 'w') as handle:
        json.dump(summary, handle, indent=2)
    if scenario is not None:
        with open(directory / 'scenario.json', 'w') as handle:
            json.dump(scenario, handle, indent=2)
    logger.info('run artefacts written to %s', directory)
