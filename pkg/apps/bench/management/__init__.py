"""Benchmark management commands."""
