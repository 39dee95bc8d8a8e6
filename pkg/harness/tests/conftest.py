import copy

import pytest

TINY = {
    'name': 'tiny',
    'seed': 3,
    'train_slots': 40,
    'test_slots': 40,
    'moving_average': 20,
    'log_every': 20,
    'radio': {'num_channels': 4, 'num_base_stations': 2, 'link_budget': 100.0},
    'traffic': {'num_users': 6, 'max_channels': 2, 'max_serving': 2, 'max_queue': 1},
    'agent': {'kind': 'macc', 'encoder_hidden': 4, 'critic_hidden': 6, 'batch_size': 2, 'train_period': 2,
              'buffer_capacity': 50, 'actor_learning_rate': 1e-3, 'critic_learning_rate': 1e-3},
    'jammer': {'kind': 'none', 'max_channels': 2, 'channels_per_attack': 2, 'start_slot': 4, 'train_until': 30,
               'batch_size': 2, 'hidden_size': 4},
    'victim_ensemble': {'kind': 'single', 'num_policies': 2},
    'jammer_ensemble': {'kind': 'single', 'num_policies': 2, 'num_classes': 2},
}


@pytest.fixture
def tiny_document():
    return copy.deepcopy(TINY)
