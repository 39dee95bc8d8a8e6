from django.apps import AppConfig


class NeuralcoreConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'neuralcore'
