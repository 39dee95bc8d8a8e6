"""
Django settings for the slicing_lab project.

The simulation apps (radio, traffic, neuralcore, slicing, jammer, ensemble)
are plain numpy libraries; Django supplies configuration, logging, the run
registry and the management commands in the harness app.
"""

from pathlib import Path
import os
import environ

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

env = environ.Env(
    SLICING_DEBUG=(bool, False),
    SLICING_LOG_LEVEL=(str, 'INFO'),
)
environ.Env.read_env(os.path.join(BASE_DIR, '.env'))

SECRET_KEY = env.str('SLICING_SECRET_KEY', default='slicing-lab-development-key')

DEBUG = env('SLICING_DEBUG')

ALLOWED_HOSTS = []

# Where run artefacts (CSV, JSON summaries, checkpoints) are written.
OUTPUT_DIR = Path(env.str('SLICING_OUTPUT_DIR', default=str(BASE_DIR / 'runs')))

SCENARIO_DIR = BASE_DIR / 'scenarios'


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'rest_framework',
    'radio',
    'traffic',
    'neuralcore',
    'slicing',
    'jammer',
    'ensemble',
    'harness',
]


# Database

DATABASES = {
    'default': env.db(
        'SLICING_DATABASE_URL',
        default=f"sqlite:///{BASE_DIR / 'registry.sqlite3'}",
    )
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

USE_TZ = True

TIME_ZONE = 'UTC'


# Logging

LOG_LEVEL = env('SLICING_LOG_LEVEL')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(asctime)s %(levelname)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {'handlers': ['console'], 'level': LOG_LEVEL, 'propagate': False}
        for app in ('radio', 'traffic', 'neuralcore', 'slicing', 'jammer', 'ensemble', 'harness')
    },
}
