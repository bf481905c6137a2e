"""Infrastructure layer: result files."""
