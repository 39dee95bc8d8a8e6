from django.apps import AppConfig


class SlicingConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'slicing'
