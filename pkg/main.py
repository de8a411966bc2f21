#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
PLUSWELD
Script entry point; everything lives in the CLI.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from cli.cli import main  # noqa: E402

if __name__ == "__main__":
    main()
