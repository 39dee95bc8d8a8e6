import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from harness.models import ExperimentRun
from harness.runner import sweep_documents


@pytest.fixture
def scenario_file(tmp_path, tiny_document):
    path = tmp_path / 'tiny.json'
    path.write_text(json.dumps(tiny_document))
    return str(path)


def run_command(name, **options):
    out = StringIO()
    call_command(name, stdout=out, **options)
    return out.getvalue()

# === train / eval ===

@pytest.mark.django_db
def test_train_writes_artefacts_and_registers_run(scenario_file, tmp_path):
    output = tmp_path / 'run'
    text = run_command('train', scenario=scenario_file, output=str(output), seed=4)
    for name in ('metrics.csv', 'outcomes.csv', 'summary.json', 'scenario.json', 'checkpoint.npz'):
        assert (output / name).exists()
    run = ExperimentRun.objects.get()
    assert run.seed == 4
    assert run.victim_kind == 'macc'
    assert run.summary['test']['slots'] == 40
    assert f'run {run.id}' in text


@pytest.mark.django_db
def test_train_creates_output_dir_on_demand(scenario_file, tmp_path, settings):
    settings.OUTPUT_DIR = tmp_path / 'fresh' / 'runs'
    run_command('train', scenario=scenario_file)
    runs = list(settings.OUTPUT_DIR.iterdir())
    assert len(runs) == 1
    assert (runs[0] / 'summary.json').exists()


def test_registry_runs_without_auth(settings):
    assert 'django.contrib.auth' not in settings.INSTALLED_APPS
    assert not hasattr(settings, 'REST_FRAMEWORK')


@pytest.mark.django_db
def test_eval_starts_from_checkpoint(scenario_file, tmp_path):
    run_command('train', scenario=scenario_file, output=str(tmp_path / 'trained'))
    run_command('eval', scenario=scenario_file, output=str(tmp_path / 'evaluated'),
                checkpoint=str(tmp_path / 'trained' / 'checkpoint.npz'))
    evaluated = ExperimentRun.objects.order_by('id').last()
    assert evaluated.summary['train']['slots'] == 0
    assert evaluated.summary['test']['slots'] == 40
    assert evaluated.summary['updates'] == 0


@pytest.mark.django_db
def test_eval_can_keep_learning(scenario_file, tmp_path):
    run_command('train', scenario=scenario_file, output=str(tmp_path / 'trained'))
    run_command('eval', scenario=scenario_file, output=str(tmp_path / 'evaluated'), keep_learning=True,
                checkpoint=str(tmp_path / 'trained' / 'checkpoint.npz'))
    assert ExperimentRun.objects.order_by('id').last().summary['updates'] > 0


@pytest.mark.django_db
def test_eval_missing_checkpoint(scenario_file, tmp_path):
    with pytest.raises(CommandError):
        run_command('eval', scenario=scenario_file, output=str(tmp_path / 'x'), checkpoint=str(tmp_path / 'none.npz'))


@pytest.mark.django_db
def test_bad_override_is_a_command_error(scenario_file, tmp_path):
    with pytest.raises(CommandError):
        run_command('train', scenario=scenario_file, output=str(tmp_path / 'x'), overrides=['radio.colour=1'])
    with pytest.raises(CommandError):
        run_command('train', scenario=scenario_file, output=str(tmp_path / 'x'), overrides=['traffic.max_serving=0'])
    assert not ExperimentRun.objects.exists()

# === compare ===

@pytest.mark.django_db
def test_compare_registry_runs(scenario_file, tmp_path):
    for seed in (1, 2):
        run_command('train', scenario=scenario_file, output=str(tmp_path / f'seed{seed}'), seed=seed)
    ids = [str(run.id) for run in ExperimentRun.objects.all()]
    csv_path = tmp_path / 'table.csv'
    text = run_command('compare', table='jammers', runs=ids, csv=str(csv_path))
    assert 'none' in text
    assert '19.47' in csv_path.read_text()


@pytest.mark.django_db
def test_compare_from_summaries_and_names(scenario_file, tmp_path):
    run_command('train', scenario=scenario_file, output=str(tmp_path / 'a'))
    text = run_command('compare', table='jammers', runs=['tiny'], summaries=[str(tmp_path / 'a')])
    assert 'none' in text
    with pytest.raises(CommandError):
        run_command('compare', runs=['999'])

# === sweep / location ===

@pytest.mark.django_db
def test_sweep_records_one_run_per_seed(scenario_file):
    text = run_command('sweep', scenario=scenario_file, seeds=[0, 1], workers=2,
                       overrides=['train_slots=6', 'test_slots=6', 'moving_average=3', 'log_every=3'])
    runs = ExperimentRun.objects.order_by('seed')
    assert [run.seed for run in runs] == [0, 1]
    assert all(run.summary['test']['slots'] == 6 for run in runs)
    assert len(text.strip().splitlines()) == 2


def test_sweep_documents_cross_axis_with_seeds(tiny_document):
    documents = sweep_documents(tiny_document, [0, 1], 'jammer.kind', ['none', 'max_rate'])
    assert [(d['jammer']['kind'], d['seed']) for d in documents] == [
        ('none', 0), ('none', 1), ('max_rate', 0), ('max_rate', 1),
    ]
    assert tiny_document['seed'] == 3


def test_optimize_jammer_location_command(scenario_file):
    text = run_command('optimize_jammer_location', scenario=scenario_file, samples=5)
    assert 'jammer position' in text
