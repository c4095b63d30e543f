#!/usr/bin/env python
"""Django command-line utility; ``python manage.py bench run --config exp.json``."""

import os
import sys


def main():
    """Run a management command (``bench`` for experiments)."""
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Is it installed and is the virtual environment active?"
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
