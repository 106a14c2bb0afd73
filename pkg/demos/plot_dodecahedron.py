"""
Recognizing the saturated dodecahedron
======================================

Saturate the dodecahedron, recognize the result and check the certificate.
"""

from pentarec import dodecahedron, recognize, saturate, serialize, verify_optimal

g, reference = saturate(dodecahedron())
print(f"n={g.n} m={g.m}")

# Recognition returns a rotation scheme on acceptance.
result = recognize(g)
print(result.line(), result.stats)

# The certificate is checked independently of the recognizer.
print("verified:", bool(verify_optimal(g, result.scheme)))
print(serialize(result.scheme)[:200], "...")
