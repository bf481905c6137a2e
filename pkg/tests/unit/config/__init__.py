"""Unit tests for the run configuration layer."""
