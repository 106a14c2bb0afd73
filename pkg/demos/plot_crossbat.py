"""
A positive instance with a CROSS-BAT
====================================

Two square disks fill the holes of an annulus of four pentagons. The saturated
result contains one CROSS-BAT, which the recognizer detects and repairs.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from pentarec import recognize, verify_optimal  # noqa: E402
from tests.constructions import PLANTED, crossbat_graph  # noqa: E402

g = crossbat_graph()
print(f"n={g.n} m={g.m}")
print("planted roles:", PLANTED)

# The stats report the number of repaired instances.
result = recognize(g)
print(result.line(), "crossbat:", result.stats["crossbat"])
print("verified:", bool(verify_optimal(g, result.scheme)))
