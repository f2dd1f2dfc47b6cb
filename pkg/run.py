#!/usr/bin/env python
"""
Entry point for running degseidel from a source checkout.

This script sets up the Python path, checks dependencies and hands over to
the same bootstrap as ``python -m degseidel``.
"""

import sys
from pathlib import Path

# Add src directory to Python path
project_root = Path(__file__).parent
src_path = project_root / "src"
sys.path.insert(0, str(src_path))

# Check for required dependencies
try:
    import dotenv  # noqa: F401
    import pydantic  # noqa: F401
except ImportError as e:
    sys.stderr.write(f"""
Error: Missing required dependencies

{e}

Please make sure you have activated your virtual environment and installed dependencies:

    pip install -r requirements.txt

Then try running again:
    python run.py verify --n 12
""")
    sys.exit(2)

from degseidel.cli import run


if __name__ == "__main__":
    sys.exit(run())
