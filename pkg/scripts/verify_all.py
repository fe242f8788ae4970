#!/usr/bin/env python3
"""Run the full verification sweep and print one CSV row per check.

Usage:
    python scripts/verify_all.py            # ground sets up to n = 3
    python scripts/verify_all.py 4 --jobs 4
    python scripts/verify_all.py 5 --long
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.cli import main  # noqa: E402

if __name__ == "__main__":
    args = sys.argv[1:]
    n = args.pop(0) if args and args[0].isdigit() else "3"
    sys.exit(main(["verify-all", "--n", n, *args]))
