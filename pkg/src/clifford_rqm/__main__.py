"""Allow ``python -m clifford_rqm``."""

import sys

from clifford_rqm.shell.cli import main

sys.exit(main())
