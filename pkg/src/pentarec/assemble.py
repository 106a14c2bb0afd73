"""Cover check and construction of the final rotation scheme from the chosen
facial 5-cliques."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

from .classify import CC, EdgeClassification
from .embed import PlanarEmbedding
from .errors import ParseError, Rejected
from .graph import Graph
from .triplets import TripletIndex

STAGE = "cover"


@dataclass(frozen=True, eq=False)
class RotationScheme:
    """Counter-clockwise edge order at every vertex plus, per edge, the edges it
    crosses ordered from its lower endpoint to its higher one.

    ``sides[e][k]`` is +1 when the k-th partner of ``e``, oriented from its lower
    to its higher endpoint, crosses ``e`` (oriented the same way) from right to
    left, and -1 otherwise. Rotations alone cannot tell the two apart.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    rotations: tuple[tuple[int, ...], ...]
    crossings: tuple[tuple[int, ...], ...]
    sides: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def crossing_pairs(self) -> int:
        return sum(len(c) for c in self.crossings) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RotationScheme):
            return NotImplemented
        return serialize(self) == serialize(other)

    def __hash__(self) -> int:
        return hash(serialize(self))


# -- cover ------------------------------------------------------------------


def check_cover(index: TripletIndex, emb: PlanarEmbedding, cls: EdgeClassification, g: Graph) -> list[int]:
    """Every face and every crossing edge must lie in exactly one facial triplet.
    Returns the facial triplet ids."""
    chosen = index.facial()
    face_hits = [0] * len(emb.faces)
    edge_hits: dict[int, int] = {}
    for tid in chosen:
        t = index.triplets[tid]
        for f in t.faces:
            face_hits[f] += 1
        for e in t.crossing_edges:
            edge_hits[e] = edge_hits.get(e, 0) + 1
    for f, hits in enumerate(face_hits):
        if hits != 1:
            raise Rejected(STAGE, "face-uncovered" if hits == 0 else "face-multicover", f)
    for e, lab in enumerate(cls.labels):
        if lab is not CC:
            continue
        hits = edge_hits.get(e, 0)
        if hits != 1:
            raise Rejected(STAGE, "edge-uncovered" if hits == 0 else "edge-multicover", g.edges[e])
    return chosen


# -- pentagram rule ---------------------------------------------------------


def pentagon_of(index: TripletIndex, tid: int, emb: PlanarEmbedding) -> tuple[int, ...]:
    """Counter-clockwise boundary walk of a triplet's three triangles, starting at the apex."""
    t = index.triplets[tid]
    darts = set()
    for f in t.faces:
        walk = emb.faces[f]
        for i in range(3):
            darts.add((walk[i], walk[(i + 1) % 3]))
    boundary = {a: b for a, b in darts if (b, a) not in darts}
    walk = [t.u]
    while len(walk) < 5:
        walk.append(boundary[walk[-1]])
    if boundary[walk[-1]] != walk[0]:
        raise AssertionError("triplet boundary is not a pentagon")
    return tuple(walk)


def scheme_from_pentagons(n: int, edges: Sequence[tuple[int, int]], pentagons: Sequence[Sequence[int]],
                          edge_id: Callable[[int, int], int]) -> RotationScheme:
    """Draw every pentagon's five chords as a pentagram inside it.

    Pentagons are counter-clockwise walks whose boundary edges form a plane
    graph with exactly these faces.
    """
    dart_owner: dict[tuple[int, int], tuple[int, int]] = {}
    for pid, c in enumerate(pentagons):
        for i in range(5):
            dart_owner[(c[i], c[(i + 1) % 5])] = (pid, i)

    start: dict[int, tuple[int, int]] = {}
    for (a, _), owner in dart_owner.items():
        if a not in start or owner < start[a]:
            start[a] = owner

    rotations: list[tuple[int, ...]] = []
    for v in range(n):
        if v not in start:
            rotations.append(())
            continue
        order: list[int] = []
        pid, i = start[v]
        first = pid
        while True:
            c = pentagons[pid]
            order.extend(edge_id(v, c[(i + s) % 5]) for s in (1, 2, 3))
            pid, i = dart_owner[(v, c[(i - 1) % 5])]
            if pid == first:
                break
            if len(order) > len(edges):
                raise AssertionError(f"pentagons around vertex {v} do not close up")
        rotations.append(tuple(order))

    crossings: list[tuple[int, ...]] = [()] * len(edges)
    sides: list[tuple[int, ...]] = [()] * len(edges)
    for c in pentagons:
        for i in range(5):
            a, b = c[i], c[(i + 2) % 5]
            near = (c[(i + 1) % 5], c[(i + 4) % 5])
            far = (c[(i + 1) % 5], c[(i + 3) % 5])
            partners = [near, far] if a < b else [far, near]
            e = edge_id(a, b)
            crossings[e] = tuple(edge_id(p, q) for p, q in partners)
            sides[e] = tuple(_side(c, (a, b), pq) for pq in partners)
    return RotationScheme(n, tuple(edges), tuple(rotations), tuple(crossings), tuple(sides))


def _side(c: Sequence[int], chord: tuple[int, int], other: tuple[int, int]) -> int:
    """+1 if ``other`` (low to high) crosses ``chord`` (low to high) from right to left."""
    a, b = sorted(chord)
    lo, hi = sorted(other)
    pos = {x: k for k, x in enumerate(c)}
    # Walking a counter-clockwise pentagon, the vertices passed between b and a
    # lie to the left of the directed chord a -> b.
    span = (pos[a] - pos[b]) % 5
    return 1 if 0 < (pos[hi] - pos[b]) % 5 < span else -1


def build_rotation_scheme(g: Graph, emb: PlanarEmbedding, index: TripletIndex, chosen: Sequence[int],
                          edge_id: Callable[[int, int], int]) -> RotationScheme:
    pentagons = [pentagon_of(index, tid, emb) for tid in chosen]
    return scheme_from_pentagons(g.n, g.edges, pentagons, edge_id)


# -- document ---------------------------------------------------------------


def serialize(scheme: RotationScheme) -> str:
    crossed = [e for e in range(scheme.m) if scheme.crossings[e]]
    doc = {
        "n": scheme.n,
        "edges": [list(p) for p in scheme.edges],
        "rotations": [list(r) for r in scheme.rotations],
        "crossings": [[e, list(scheme.crossings[e])] for e in crossed],
        "crossing_sides": [[e, list(scheme.sides[e])] for e in crossed],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _int(value: object, where: str, low: int | None = None, high: int | None = None) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError("expected an integer", field=where)
    if (low is not None and value < low) or (high is not None and value >= high):
        raise ParseError(f"value {value} out of range", field=where)
    return value


def _list(value: object, where: str) -> list:
    if not isinstance(value, list):
        raise ParseError("expected a list", field=where)
    return value


def _per_edge(doc: dict, key: str, m: int, check: Callable[[object, str], int]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()] * m
    seen: set[int] = set()
    for k, item in enumerate(_list(doc.get(key), key)):
        where = f"{key}[{k}]"
        item = _list(item, where)
        if len(item) != 2:
            raise ParseError("expected [edge-id, [values]]", field=where)
        e = _int(item[0], where + "[0]", 0, m)
        if e in seen:
            raise ParseError(f"edge {e} listed twice", field=where)
        seen.add(e)
        values = _list(item[1], where + "[1]")
        out[e] = tuple(check(x, f"{where}[1][{j}]") for j, x in enumerate(values))
    return out


def deserialize(document: str | bytes) -> RotationScheme:
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object")
    for key in ("n", "edges", "rotations", "crossings", "crossing_sides"):
        if key not in doc:
            raise ParseError("missing", field=key)
    n = _int(doc["n"], "n", 1)
    edges = []
    for k, pair in enumerate(_list(doc["edges"], "edges")):
        pair = _list(pair, f"edges[{k}]")
        if len(pair) != 2:
            raise ParseError("expected a vertex pair", field=f"edges[{k}]")
        edges.append((_int(pair[0], f"edges[{k}][0]", 0, n), _int(pair[1], f"edges[{k}][1]", 0, n)))
    m = len(edges)
    rotations = _list(doc["rotations"], "rotations")
    if len(rotations) != n:
        raise ParseError(f"expected {n} rotations, found {len(rotations)}", field="rotations")
    rots = tuple(
        tuple(_int(x, f"rotations[{v}][{j}]", 0, m) for j, x in enumerate(_list(r, f"rotations[{v}]")))
        for v, r in enumerate(rotations)
    )
    crossings = _per_edge(doc, "crossings", m, lambda x, w: _int(x, w, 0, m))

    def side(x: object, where: str) -> int:
        if x not in (1, -1) or isinstance(x, bool):
            raise ParseError("expected 1 or -1", field=where)
        return int(x)  # type: ignore[arg-type]

    sides = _per_edge(doc, "crossing_sides", m, side)
    for e in range(m):
        if len(sides[e]) != len(crossings[e]):
            raise ParseError(f"edge {e} has {len(crossings[e])} crossings but {len(sides[e])} sides",
                             field="crossing_sides")
    return RotationScheme(n, tuple(edges), rots, tuple(crossings), tuple(sides))
