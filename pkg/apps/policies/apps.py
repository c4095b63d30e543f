"""Bandit policies app configuration."""

from django.apps import AppConfig


class PoliciesConfig(AppConfig):
    """Bandit policies app configuration."""

    name = "apps.policies"
    verbose_name = "Bandit policies"
