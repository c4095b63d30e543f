"""Library, harness and CLI tests."""
