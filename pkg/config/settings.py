"""
Django settings for the crhvt-bench project.

The project only uses Django for its settings layer, app registry and
management commands; there is no database and no HTTP surface.

For more information on this file, see
https://docs.djangoproject.com/en/6.0/topics/settings/
"""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Required by Django even though nothing is signed.
SECRET_KEY = os.getenv("SECRET_KEY", "crhvt-bench-not-secret")

DEBUG = os.getenv("DEBUG", "False").lower() in ("true", "1", "yes")

ALLOWED_HOSTS: list[str] = []

# Application definition
INSTALLED_APPS = [
    "apps.core",
    "apps.linalg",
    "apps.losses",
    "apps.estimator",
    "apps.policies",
    "apps.environment",
    "apps.bench",
]

# No database: every run is an in-memory simulation.
DATABASES: dict = {}

# Internationalization
LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

# =============================================================================
# Benchmark configuration
# =============================================================================

# Upper bound on seeds executed concurrently by the suite runner (1 = in-process)
BENCH_THREADS = max(1, int(os.getenv("BENCH_THREADS", "1")))

# Default directory for CSV / JSON / SVG outputs when --out is not given
BENCH_OUTPUT_DIR = Path(os.getenv("BENCH_OUTPUT_DIR", str(BASE_DIR / "results")))

BENCH_LOG_LEVEL = os.getenv("BENCH_LOG_LEVEL", "INFO").upper()

# =============================================================================
# Logging
# =============================================================================

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "%(asctime)s %(levelname)-7s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "plain",
        },
    },
    "loggers": {
        "apps": {
            "handlers": ["console"],
            "level": BENCH_LOG_LEVEL,
            "propagate": False,
        },
    },
}
