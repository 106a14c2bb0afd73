"""Linear-time recognition of optimal 2-planar graphs with certified rotation schemes."""

from .assemble import RotationScheme, deserialize, serialize
from .errors import ParseError, Rejected
from .generate import Pentangulation, dodecahedron, glue, mutate, random_pentangulation, saturate
from .graph import Graph, build_graph, degeneracy_order
from .recognize import Result, recognize
from .verify import oracle_recognize, verify_optimal, verify_scheme

__all__ = [
    "Graph", "ParseError", "Pentangulation", "Rejected", "Result", "RotationScheme",
    "build_graph", "degeneracy_order", "deserialize", "dodecahedron", "glue", "mutate",
    "oracle_recognize", "random_pentangulation", "recognize", "saturate", "serialize",
    "verify_optimal", "verify_scheme",
]
