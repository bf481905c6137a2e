"""Allow `python -m qbcharge`."""

from qbcharge.main import app

app()
