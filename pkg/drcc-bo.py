"""Main script for running DRCC-BO experiments without installing the package."""

import sys
from pathlib import Path

# Add src to path if package is not installed
try:
    from drccbo.cli import main
except ModuleNotFoundError:
    sys.path.insert(0, str(Path(__file__).parent / 'src'))
    from drccbo.cli import main


if __name__ == '__main__':
    sys.exit(main())
