"""Run the structural checks over every code up to a given length.

Run: python3 demos/04_theorem_suite.py [n_max]   (default 6; 7 takes a minute or two)
"""

from __future__ import annotations

import sys

from cosetposet.verify import run_verify

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 6
report = run_verify(n_max, mode="exhaustive", catalog_n_max=min(n_max, 6))
print(report.to_text())
