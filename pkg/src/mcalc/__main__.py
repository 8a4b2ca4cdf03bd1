from __future__ import annotations

import sys

from mcalc.cli import main

sys.exit(main())
