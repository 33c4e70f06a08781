#!/usr/bin/env python3
"""Verify every bundled reference entry and print one line per entry."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from lcdkit.cli import main

if __name__ == "__main__":
    sys.exit(main(["corpus-check"] + sys.argv[1:]))
