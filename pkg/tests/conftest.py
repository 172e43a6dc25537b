# SPDX-License-Identifier: CC-BY-NC-4.0

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))
