"""Allow ``python -m recongraph``."""

import sys

from .cli import main

sys.exit(main())
