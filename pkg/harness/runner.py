"""Run orchestration: train/test phases, artefacts, checkpoints, the run registry and sweeps."""
import copy
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import django
from django.conf import settings
from django.utils import timezone

from neuralcore.checkpoint import load_checkpoint, save_checkpoint

from .metrics import summarize, write_outputs
from .models import ExperimentRun
from .scenario import apply_overrides, validate_document
from .simulation import Simulation

logger = logging.getLogger(__name__)


@dataclass
class RunResult:
    summary: dict
    simulation: Simulation
    output_dir: Path | None = None
    run: ExperimentRun | None = None


def run_directory(name, seed):
    stamp = timezone.now().strftime('%Y%m%d-%H%M%S-%f')
    return Path(settings.OUTPUT_DIR) / f'{name}-seed{seed}-{stamp}'


def run_summary(simulation):
    extra = {
        'victim_kind': simulation.scenario.agent.kind,
        'ensemble_kind': simulation.scenario.victim_ensemble.kind,
        'jammer_kind': simulation.scenario.jammer.kind,
        'seed': simulation.scenario.seed,
    }
    agent = simulation.agent
    if hasattr(agent, 'mode_counts'):
        extra['exploration'] = {mode.value: count for mode, count in agent.mode_counts.items()}
    if hasattr(agent, 'updates'):
        extra['updates'] = agent.updates
    jammer = simulation.jammer
    if jammer is not None:
        active = max(simulation.scenario.test_slots, 1)
        extra['jammer'] = {
            'position': simulation.geometry.jammer_position.tolist(),
            'average_power': jammer.average_power(active, simulation.scenario.radio.jam_power),
            'channel_slots': jammer.jammed_channel_slots,
        }
        if hasattr(jammer, 'beta'):
            extra['jammer']['beta'] = jammer.beta
    return summarize(simulation.metrics, simulation.traffic.ledger, simulation.scenario.train_slots, extra)


def record_run(scenario, summary, output_dir=''):
    return ExperimentRun.objects.create(
        name=scenario.name,
        seed=scenario.seed,
        victim_kind=scenario.agent.kind,
        jammer_kind=scenario.jammer.kind,
        ensemble_kind=scenario.victim_ensemble.kind,
        scenario=scenario.to_dict(),
        summary=summary,
        output_dir=str(output_dir),
    )


def finish(simulation, output_dir, record):
    summary = run_summary(simulation)
    if output_dir is not None:
        trace = simulation.jammer.trace if simulation.jammer is not None else None
        write_outputs(output_dir, simulation.metrics, simulation.traffic.ledger, simulation.scenario.train_slots,
                      summary, simulation.scenario.to_dict(), trace)
        save_checkpoint(Path(output_dir) / 'checkpoint.npz', simulation.modules(), {'scenario': simulation.scenario.name})
    run = record_run(simulation.scenario, summary, output_dir or '') if record else None
    test = summary['test']
    logger.info('%s seed %d: test reward %.3f, completion %.3f', simulation.scenario.name, simulation.scenario.seed,
                test['average_reward'], test['completion_ratio'])
    return RunResult(summary, simulation, output_dir, run)


def run_experiment(scenario, output_dir=None, record=True):
    """Training phase then test phase, fully determined by the scenario seed."""
    simulation = Simulation(scenario)
    logger.info('%s: training %d slots, testing %d slots', scenario.name, scenario.train_slots, scenario.test_slots)
    simulation.train()
    simulation.test()
    return finish(simulation, output_dir, record)


def evaluate(scenario, checkpoint, output_dir=None, record=True, frozen=True):
    """Test phase only, starting from saved parameters; learning stays off unless frozen is False."""
    simulation = Simulation(scenario)
    load_checkpoint(checkpoint, simulation.modules())
    if frozen:
        simulation.freeze()
    simulation.test()
    return finish(simulation, output_dir, record)


def _sweep_one(document):
    scenario = validate_document(document)
    result = run_experiment(scenario, output_dir=None, record=False)
    return scenario, result.summary


def sweep_documents(document, seeds, axis=None, values=None):
    """One scenario document per (axis value, seed)."""
    documents = []
    for value in (values if axis else [None]):
        for seed in seeds:
            overrides = [f'seed={seed}']
            if axis:
                overrides.append(f'{axis}={json.dumps(value)}')
            documents.append(apply_overrides(copy.deepcopy(document), overrides))
    return documents


def sweep(document, seeds, axis=None, values=None, workers=None):
    """Independent seeded runs in a process pool; each is recorded once it returns."""
    documents = sweep_documents(document, seeds, axis, values)
    runs = []
    # spawned workers import harness code, which needs the app registry
    with ProcessPoolExecutor(max_workers=workers, initializer=django.setup) as pool:
        for scenario, summary in pool.map(_sweep_one, documents):
            runs.append(record_run(scenario, summary))
    return runs
