#!/usr/bin/env python3
"""
epigen command-line entry point.
Idempotent and conjugate factorizations of singular transformations.
"""

import sys
from pathlib import Path
from typing import Optional, Sequence

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent / "src"))
sys.path.insert(0, str(Path(__file__).parent))

from controllers.cli_controller import run  # noqa: E402


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
