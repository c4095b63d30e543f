"""Console entry point: ``bench run ...`` forwards to ``manage.py bench run ...``."""

import os
import sys

from django.core.management import execute_from_command_line


def main() -> None:
    """Run the bench management command with the process arguments."""
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")
    execute_from_command_line(["bench", "bench", *sys.argv[1:]])


if __name__ == "__main__":
    main()
