"""CR-Hvt estimator app configuration."""

from django.apps import AppConfig


class EstimatorConfig(AppConfig):
    """CR-Hvt estimator app configuration."""

    name = "apps.estimator"
    verbose_name = "CR-Hvt estimator"
