from rest_framework import serializers

from ensemble.config import ENSEMBLE_KINDS
from jammer.config import JAMMER_KINDS
from slicing.params import ACTOR_KINDS, AGENT_KINDS


def pair(**kwargs):
    return serializers.ListField(child=serializers.FloatField(), min_length=2, max_length=2, required=False, **kwargs)


class RadioSerializer(serializers.Serializer):
    num_channels = serializers.IntegerField(min_value=1, required=False)
    num_base_stations = serializers.IntegerField(min_value=1, required=False)
    tx_power_to_noise = serializers.FloatField(min_value=0, required=False)
    jam_power_to_noise = serializers.FloatField(min_value=0, required=False)
    path_loss_exponent = serializers.FloatField(max_value=0, required=False)
    bs_height = serializers.FloatField(min_value=0, required=False)
    jammer_height = serializers.FloatField(min_value=0, required=False)
    doppler = serializers.FloatField(min_value=0, required=False)
    slot_duration = serializers.FloatField(min_value=0, required=False)
    cell_radius = serializers.FloatField(min_value=0, required=False)
    link_budget = serializers.FloatField(min_value=0, required=False)


class TrafficSerializer(serializers.Serializer):
    num_users = serializers.IntegerField(min_value=1, required=False)
    max_channels = serializers.IntegerField(min_value=1, required=False)
    max_serving = serializers.IntegerField(min_value=1, required=False)
    max_queue = serializers.IntegerField(min_value=0, required=False)
    cooldown = serializers.IntegerField(min_value=0, required=False)
    payload_range = pair()
    min_rate_range = pair()
    lifetime_slack = pair()
    history_depth = serializers.IntegerField(min_value=1, required=False)
    step_radius = serializers.FloatField(min_value=0, required=False)
    arrival_probability = serializers.FloatField(min_value=0, max_value=1, required=False)


class AgentSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=AGENT_KINDS, required=False)
    actor = serializers.ChoiceField(choices=ACTOR_KINDS, required=False)
    encoder_hidden = serializers.IntegerField(min_value=1, required=False)
    critic_hidden = serializers.IntegerField(min_value=1, required=False)
    fnn_hidden = serializers.ListField(child=serializers.IntegerField(min_value=1), required=False)
    attention_v = serializers.FloatField(required=False)
    actor_learning_rate = serializers.FloatField(min_value=0, required=False)
    critic_learning_rate = serializers.FloatField(min_value=0, required=False)
    gamma = serializers.FloatField(min_value=0, max_value=1, required=False)
    batch_size = serializers.IntegerField(min_value=1, required=False)
    train_period = serializers.IntegerField(min_value=1, required=False)
    buffer_capacity = serializers.IntegerField(min_value=1, required=False)
    epsilon_start = serializers.FloatField(min_value=0, max_value=1, required=False)
    epsilon_end = serializers.FloatField(min_value=0, max_value=1, required=False)
    epsilon_max_rate = serializers.FloatField(min_value=0, max_value=1, required=False)


class JammerSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=JAMMER_KINDS, required=False)
    max_channels = serializers.IntegerField(min_value=1, required=False)
    channels_per_attack = serializers.IntegerField(min_value=1, required=False)
    period = serializers.IntegerField(min_value=2, required=False)
    gamma = serializers.FloatField(min_value=0, max_value=1, required=False)
    position = pair()
    height = serializers.FloatField(min_value=0, required=False)
    start_slot = serializers.IntegerField(min_value=0, required=False)
    train_until = serializers.IntegerField(min_value=0, required=False)
    epsilon_start = serializers.FloatField(min_value=0, max_value=1, required=False)
    epsilon_end = serializers.FloatField(min_value=0, max_value=1, required=False)
    learning_rate = serializers.FloatField(min_value=0, required=False)
    hidden_size = serializers.IntegerField(min_value=1, required=False)
    batch_size = serializers.IntegerField(min_value=1, required=False)
    buffer_capacity = serializers.IntegerField(min_value=1, required=False)
    beta_window = serializers.IntegerField(min_value=1, required=False)
    initial_beta = serializers.FloatField(min_value=0, required=False)
    fixed_beta = serializers.FloatField(min_value=0, required=False, allow_null=True)
    seed = serializers.IntegerField(min_value=0, required=False, allow_null=True)


class EnsembleSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=ENSEMBLE_KINDS, required=False)
    num_policies = serializers.IntegerField(min_value=1, required=False)
    num_classes = serializers.IntegerField(min_value=1, required=False)
    correlation_threshold = serializers.FloatField(required=False)
    dual = serializers.FloatField(min_value=0, required=False)
    capacity = serializers.IntegerField(min_value=1, required=False)
    seed = serializers.IntegerField(min_value=0, required=False, allow_null=True)


class ScenarioSerializer(serializers.Serializer):
    name = serializers.CharField(max_length=100, required=False)
    seed = serializers.IntegerField(min_value=0, required=False)
    train_slots = serializers.IntegerField(min_value=0, required=False)
    test_slots = serializers.IntegerField(min_value=0, required=False)
    moving_average = serializers.IntegerField(min_value=1, required=False)
    station_spacing = serializers.FloatField(min_value=0, required=False)
    optimize_jammer = serializers.BooleanField(required=False)
    location_samples = serializers.IntegerField(min_value=1, required=False)
    check_invariants = serializers.BooleanField(required=False)
    log_every = serializers.IntegerField(min_value=1, required=False)
    radio = RadioSerializer(required=False)
    traffic = TrafficSerializer(required=False)
    agent = AgentSerializer(required=False)
    jammer = JammerSerializer(required=False)
    victim_ensemble = EnsembleSerializer(required=False)
    jammer_ensemble = EnsembleSerializer(required=False)

    def validate(self, data):
        jammer = data.get('jammer', {})
        if jammer.get('channels_per_attack', 0) > jammer.get('max_channels', 8):
            raise serializers.ValidationError({'jammer': 'channels_per_attack exceeds max_channels'})
        return data

