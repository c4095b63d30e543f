"""Robust bandit library apps and the benchmark harness."""
