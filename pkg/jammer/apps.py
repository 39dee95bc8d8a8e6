from django.apps import AppConfig


class JammerAppConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'jammer'
