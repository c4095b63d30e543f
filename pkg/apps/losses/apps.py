"""Robust losses app configuration."""

from django.apps import AppConfig


class LossesConfig(AppConfig):
    """Robust losses app configuration."""

    name = "apps.losses"
    verbose_name = "Robust losses"
