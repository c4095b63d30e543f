"""Project settings and the ``bench`` console entry point."""
