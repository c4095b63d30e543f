"""Bandit environment app configuration."""

from django.apps import AppConfig


class EnvironmentConfig(AppConfig):
    """Bandit environment app configuration."""

    name = "apps.environment"
    verbose_name = "Bandit environment"
