"""
Shared pytest configuration.
"""

import logging
import os
import sys
from pathlib import Path

import pytest

# Add src directory to Python path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Run every test with default configuration, whatever the shell exports."""
    for name in list(os.environ):
        if name.startswith("DEGSEIDEL_") or name in ("LOG_LEVEL", "LOG_FORMAT"):
            monkeypatch.delenv(name, raising=False)


@pytest.fixture(autouse=True)
def restore_package_logger():
    """Undo configure_logging so caplog sees package records in later tests."""
    package = logging.getLogger("degseidel")
    handlers, level, propagate = package.handlers[:], package.level, package.propagate
    yield
    package.handlers[:] = handlers
    package.setLevel(level)
    package.propagate = propagate
