"""Benchmark harness app configuration."""

from django.apps import AppConfig


class BenchConfig(AppConfig):
    """Benchmark harness app configuration."""

    name = "apps.bench"
    verbose_name = "Benchmark harness"
