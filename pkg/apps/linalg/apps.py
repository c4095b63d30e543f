"""Linear algebra app configuration."""

from django.apps import AppConfig


class LinalgConfig(AppConfig):
    """Linear algebra app configuration."""

    name = "apps.linalg"
    verbose_name = "Linear algebra"
