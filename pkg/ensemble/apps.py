from django.apps import AppConfig


class EnsembleAppConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'ensemble'
    label = 'ensemble'
