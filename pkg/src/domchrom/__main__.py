"""Module CLI entry: python -m domchrom ..."""

import sys

from .cli import main

sys.exit(main())
