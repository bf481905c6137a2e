"""Flat-file writers for charging results."""

from qbcharge.infrastructure.output.csv_writer import (
    emit_csv,
    family_path,
    metadata_path,
    write_metadata,
)

__all__ = ["emit_csv", "family_path", "metadata_path", "write_metadata"]
