"""
Rejecting mutated instances
===========================

Each mutation kind breaks a positive instance in a different way. The reject
line names the stage and the reason.
"""

from collections import Counter

from pentarec import mutate, random_pentangulation, recognize, saturate
from pentarec.generate import MUTATION_KINDS, TARGETED_KINDS

g, _ = saturate(random_pentangulation(2, 0))

for kind in MUTATION_KINDS + TARGETED_KINDS:
    reasons = Counter(" ".join(recognize(mutate(g, kind, seed)).line().split()[1:3]) for seed in range(20))
    print(f"{kind:18s}", dict(reasons))

# Diagnostic mode keeps going past the prechecks and lists every rejection.
result = recognize(mutate(g, "edge-drop", 0), diagnostic=True)
print(result.line())
print(result.diagnostics)
