"""
Django settings for the Hadamard verification toolkit.

The toolkit has no database and no web front end; Django provides the
management-command surface, the app registry, the logging configuration
and the test runner.
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'hadamard-toolkit-local-only')

DEBUG = os.getenv('DJANGO_DEBUG', 'False').lower() == 'true'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',

    'Algebra',
    'Scheme',
    'Families',
    'Gram',
    'Nomura',
    'Reports',
]

# Reports are the only persistence.
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Logging

HADAMARD_LOG_LEVEL = os.getenv('HADAMARD_LOG_LEVEL', 'INFO').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': HADAMARD_LOG_LEVEL,
            'propagate': False,
        }
        for app in ('Algebra', 'Scheme', 'Families', 'Gram', 'Nomura', 'Reports')
    },
}


# Toolkit configuration

TOOLKIT_VERSION = '1.0.0'

# Bits of working precision for every numeric computation context.
DEFAULT_PRECISION = int(os.getenv('HADAMARD_PRECISION', '256'))
MIN_PRECISION = 128

# Numeric Gram tolerance is 2**-NUMERIC_TOLERANCE_EXPONENT * n.
NUMERIC_TOLERANCE_EXPONENT = 80
UNIMODULAR_TOLERANCE = '1e-20'

DEFAULT_GRID = [(q, m) for q in (4, 8, 16, 32) for m in (2, 3)]
NOMURA_GRID = DEFAULT_GRID + [(64, 2)]

SAMPLE_PAIRS_PER_RELATION = 200
# Sampled pairs per relation for the Jones product spot checks.
JONES_SAMPLES = 10
DEFAULT_SEED = int(os.getenv('HADAMARD_SEED', '0'))

# Path of a realized scheme file for (q, m) = (4, 2); dense checks are
# skipped when unset.
SCHEME_FILE = os.getenv('HADAMARD_SCHEME_FILE') or None


# Celery: grid points run as tasks when enabled, inline otherwise.

CELERY_ENABLED = os.getenv('HADAMARD_CELERY_ENABLED', 'False').lower() == 'true'
CELERY_BROKER_URL = os.getenv('CELERY_BROKER_URL', 'redis://localhost:6379/0')
CELERY_RESULT_BACKEND = os.getenv('CELERY_RESULT_BACKEND', CELERY_BROKER_URL)
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_ACCEPT_CONTENT = ['json']
