"""Module entry point: python -m compfade."""
import sys

from .cli import main

sys.exit(main())
