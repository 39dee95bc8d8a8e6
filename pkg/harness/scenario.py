"""Scenario: every parameter of one experiment, loaded from JSON with dotted-path overrides."""
import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path

from django.conf import settings

from ensemble.config import EnsembleConfig
from jammer.config import JammerConfig
from radio.params import RadioParams
from slicing.params import AgentParams
from slicing_lab.exceptions import ConfigurationError
from traffic.params import TrafficParams

logger = logging.getLogger(__name__)

SECTIONS = {
    'radio': RadioParams,
    'traffic': TrafficParams,
    'agent': AgentParams,
    'jammer': JammerConfig,
    'victim_ensemble': EnsembleConfig,
    'jammer_ensemble': EnsembleConfig,
}


@dataclass(frozen=True)
class Scenario:
    name: str = 'desk'
    seed: int = 0
    train_slots: int = 10_000
    test_slots: int = 20_000
    moving_average: int = 500
    station_spacing: float = 3.5     # km
    optimize_jammer: bool = False
    location_samples: int = 10_000
    check_invariants: bool = True
    log_every: int = 1000
    radio: RadioParams = field(default_factory=RadioParams)
    traffic: TrafficParams = field(default_factory=TrafficParams)
    agent: AgentParams = field(default_factory=AgentParams)
    jammer: JammerConfig = field(default_factory=lambda: JammerConfig(kind='none'))
    victim_ensemble: EnsembleConfig = field(default_factory=EnsembleConfig)
    jammer_ensemble: EnsembleConfig = field(default_factory=lambda: EnsembleConfig(num_policies=2, num_classes=2))

    def __post_init__(self):
        if self.train_slots < 0 or self.test_slots < 0:
            raise ConfigurationError('phase lengths must be >= 0')
        if self.moving_average < 1 or self.log_every < 1:
            raise ConfigurationError('moving_average and log_every must be >= 1')
        if self.jammer.enabled:
            self.jammer.validate(self.radio.num_channels)
        if self.traffic.max_channels > self.radio.num_channels:
            raise ConfigurationError(f'N_c={self.traffic.max_channels} exceeds N={self.radio.num_channels}')

    @property
    def total_slots(self):
        return self.train_slots + self.test_slots

    def to_dict(self):
        return json.loads(json.dumps(asdict(self)))


def build_scenario(data):
    """Scenario from validated plain data; library invariants surface as ConfigurationError."""
    data = dict(data)
    sections = {
        name: cls(**{key: _freeze(value) for key, value in data.pop(name).items()})
        for name, cls in SECTIONS.items() if name in data
    }
    return Scenario(**data, **sections)


def _freeze(value):
    return tuple(value) if isinstance(value, list) else value


def parse_override(text):
    """'radio.doppler=2' -> (['radio', 'doppler'], 2); values are JSON when they parse, else strings."""
    if '=' not in text:
        raise ConfigurationError(f'override {text!r} is not of the form path=value')
    path, raw = text.split('=', 1)
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return path.strip().split('.'), value


def apply_overrides(document, overrides, fields=None):
    """Set dotted paths in a scenario document; paths must name serializer fields."""
    from .serializers import ScenarioSerializer

    fields = ScenarioSerializer().fields if fields is None else fields
    for text in overrides or ():
        path, value = parse_override(text)
        node, known = document, fields
        for key in path[:-1]:
            if key not in known or not hasattr(known[key], 'fields'):
                raise ConfigurationError(f'unknown scenario path {".".join(path)!r}')
            known = known[key].fields
            node = node.setdefault(key, {})
        if path[-1] not in known:
            raise ConfigurationError(f'unknown scenario path {".".join(path)!r}')
        node[path[-1]] = value
        logger.info('override %s = %r', '.'.join(path), value)
    return document


def scenario_path(name_or_path):
    path = Path(name_or_path)
    if path.exists():
        return path
    candidate = Path(settings.SCENARIO_DIR) / f'{name_or_path}.json'
    if not candidate.exists():
        raise ConfigurationError(f'no scenario file {name_or_path!r}')
    return candidate


def validate_document(document):
    from .serializers import ScenarioSerializer

    serializer = ScenarioSerializer(data=document)
    if not serializer.is_valid():
        raise ConfigurationError('invalid scenario', errors=serializer.errors)
    return build_scenario(serializer.validated_data)


def load_scenario(name_or_path, overrides=None):
    path = scenario_path(name_or_path)
    with open(path) as handle:
        document = json.load(handle)
    apply_overrides(document, overrides)
    scenario = validate_document(document)
    logger.info('scenario %s loaded from %s', scenario.name, path)
    return scenario
