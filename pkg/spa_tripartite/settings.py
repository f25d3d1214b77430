"""
Django settings for the spa_tripartite project.

The project has no database and no web surface; Django provides the settings
layer, the logging configuration, the management-command CLI and the test runner.

Every numerical tolerance can be overridden from the environment or a .env file.
"""

import os
from pathlib import Path

from dotenv import find_dotenv, load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(find_dotenv())

SECRET_KEY = os.getenv("SECRET_KEY", "SPA_TRIPARTITE_SECRET")

# Application definition
INSTALLED_APPS = [
    "linalg_operations",
    "state_operations",
    "partial_transpose_operations",
    "spa_operations",
    "classification_operations",
    "tangle_operations",
]

DATABASES = {}

# Eigensolver
# "jacobi" is the cyclic Jacobi solver in linalg_operations, "lapack" delegates to numpy.linalg.eigvalsh
EIGENSOLVER_BACKEND = os.getenv("EIGENSOLVER_BACKEND", "jacobi")
CHOI_EIGENSOLVER_BACKEND = os.getenv("CHOI_EIGENSOLVER_BACKEND", "jacobi")
JACOBI_TOLERANCE = float(os.getenv("JACOBI_TOLERANCE", 1e-13))
JACOBI_MAX_SWEEPS = int(os.getenv("JACOBI_MAX_SWEEPS", 100))

# State validation
HERMITICITY_TOLERANCE = float(os.getenv("HERMITICITY_TOLERANCE", 1e-10))
STATE_TOLERANCE = float(os.getenv("STATE_TOLERANCE", 1e-10))
SYMMETRIZE_TOLERANCE = float(os.getenv("SYMMETRIZE_TOLERANCE", 1e-8))
CATALOG_RENORMALIZE_TOLERANCE = float(os.getenv("CATALOG_RENORMALIZE_TOLERANCE", 1e-3))

# Entanglement criteria
PPT_TOLERANCE = float(os.getenv("PPT_TOLERANCE", 1e-10))
THRESHOLD_EPS = float(os.getenv("THRESHOLD_EPS", 1e-9))
TANGLE_TOLERANCE = float(os.getenv("TANGLE_TOLERANCE", 1e-8))
CP_BISECTION_ITERATIONS = int(os.getenv("CP_BISECTION_ITERATIONS", 60))

# Reproduction / output
PUBLISHED_TABLE_TOLERANCE = float(os.getenv("PUBLISHED_TABLE_TOLERANCE", 1e-3))
CSV_SIGNIFICANT_DIGITS = int(os.getenv("CSV_SIGNIFICANT_DIGITS", 12))

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    # Handlers #############################################################
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
        },
    },
    # Loggers ####################################################################
    "loggers": {
        "django": {
            "handlers": ["console"],
            "propagate": True,
            "level": os.getenv("DJANGO_LOG_LEVEL", "INFO"),
        },
    },
}
