"""Candidate facial 5-cliques (triplets) of the triangulated embedding and the
constant-time battery that decides which of them are facial."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .classify import CC, EdgeClassification
from .embed import DualGraph, PlanarEmbedding
from .errors import Rejected
from .graph import DegeneracyOrder, Graph

STAGE = "triplets"

# Size thresholds of the counting argument: with this many candidates a
# disjoint one always exists.
BIG = 82
SCAN = 63


class TripletLabel(Enum):
    UNLABELED = "unlabeled"
    FACIAL = "facial"
    NON_FACIAL = "non-facial"
    FACIAL_FORCED = "facial-forced"


FACIAL_LABELS = (TripletLabel.FACIAL, TripletLabel.FACIAL_FORCED)


@dataclass(frozen=True)
class Triplet:
    """Three consecutive triangles ``f1 = (u,w1,v1)``, ``f = (u,w2,w1)`` and
    ``f2 = (u,v2,w2)`` around the apex ``u`` whose vertices form a 5-clique.
    ``e1 = (v1,w2)``, ``e2 = (v2,w1)`` and ``e = (v1,v2)`` are the three clique
    edges missing from the embedding."""

    id: int
    u: int
    v1: int
    w1: int
    w2: int
    v2: int
    f1: int
    f: int
    f2: int
    e1: int
    e2: int
    e: int

    @property
    def faces(self) -> tuple[int, int, int]:
        return (self.f1, self.f, self.f2)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.u, self.v1, self.w1, self.w2, self.v2))

    @property
    def crossing_edges(self) -> tuple[int, int, int]:
        return (self.e1, self.e2, self.e)

    def mirrored(self) -> Triplet:
        return Triplet(self.id, self.u, self.v2, self.w2, self.w1, self.v1,
                       self.f2, self.f, self.f1, self.e2, self.e1, self.e)


class TripletIndex:
    def __init__(self, triplets: list[Triplet], face_count: int):
        self.triplets = triplets
        self.by_face: list[list[int]] = [[] for _ in range(face_count)]
        self.by_edge: dict[int, list[int]] = {}
        self.by_path: dict[tuple[int, int, int], int] = {}
        for t in triplets:
            for f in t.faces:
                self.by_face[f].append(t.id)
            for e in t.crossing_edges:
                self.by_edge.setdefault(e, []).append(t.id)
            self.by_path[(t.f1, t.f, t.f2)] = t.id
        self.labels = [TripletLabel.UNLABELED] * len(triplets)
        self._faces = [frozenset(t.faces) for t in triplets]
        self._vertices = [t.vertices for t in triplets]

    def __len__(self) -> int:
        return len(self.triplets)

    def lookup(self, a: int, mid: int, b: int) -> int | None:
        return self.by_path.get((a, mid, b) if a < b else (b, mid, a))

    def face_disjoint(self, s: int, t: int) -> bool:
        return self._faces[s].isdisjoint(self._faces[t])

    def vertex_set(self, t: int) -> frozenset[int]:
        return self._vertices[t]

    def facial(self) -> list[int]:
        return [t for t, lab in enumerate(self.labels) if lab in FACIAL_LABELS]


def enumerate_triplets(emb: PlanarEmbedding, dual_graph: DualGraph, g: Graph, d: DegeneracyOrder) -> TripletIndex:
    """Test the three dual paths through every face; keep those spanning a 5-clique
    whose three missing edges are all outside the embedding."""
    faces = emb.faces
    pos = emb.position
    found: list[Triplet] = []
    for fid, arcs in enumerate(dual_graph.arcs):
        for i in range(3):
            ga, wa, u = arcs[i]
            gb, u2, wb = arcs[(i + 1) % 3]
            if u != u2:
                raise AssertionError("dual arcs out of order")
            va = _apex(faces[ga], wa, u)
            vb = _apex(faces[gb], u, wb)
            if va == vb or va in (wb,) or vb in (wa,):
                continue
            if ga < gb:
                f1, w1, v1, f2, w2, v2 = ga, wa, va, gb, wb, vb
            else:
                f1, w1, v1, f2, w2, v2 = gb, wb, vb, ga, wa, va
            edges = []
            for a, b in ((v1, w2), (v2, w1), (v1, v2)):
                if b in pos[a]:
                    break
                e = d.edge_between(a, b)
                if e is None:
                    break
                edges.append(e)
            else:
                found.append(Triplet(len(found), u, v1, w1, w2, v2, f1, fid, f2, *edges))
    return TripletIndex(found, len(faces))


def _apex(walk: tuple[int, ...], a: int, b: int) -> int:
    for x in walk:
        if x != a and x != b:
            return x
    raise AssertionError("degenerate face")


def forced_fast_path(index: TripletIndex, cls: EdgeClassification, g: Graph) -> None:
    """Label a triplet as forced when it is the only one containing some crossing edge."""
    for e, lab in enumerate(cls.labels):
        if lab is not CC:
            continue
        holders = index.by_edge.get(e)
        if not holders:
            raise Rejected(STAGE, "uncoverable-edge", g.edges[e])
        if len(holders) == 1:
            index.labels[holders[0]] = TripletLabel.FACIAL_FORCED


class Battery:
    """The four conditions under which a triplet cannot be a facial 5-clique."""

    def __init__(self, index: TripletIndex, emb: PlanarEmbedding, dual_graph: DualGraph,
                 g: Graph, d: DegeneracyOrder, big: int = BIG, scan: int = SCAN):
        self.index = index
        self.emb = emb
        self.dual = dual_graph
        self.g = g
        self.d = d
        self.big = big
        self.scan = scan
        self._nbrs: dict[int, list[int]] = {}

    # -- helpers --------------------------------------------------------------

    def _neighbors(self, v: int) -> list[int]:
        nb = self._nbrs.get(v)
        if nb is None:
            nb = self._nbrs[v] = self.g.neighbors(v)
        return nb

    def _across(self, f: int, a: int, b: int) -> int:
        """Face sharing the edge ``(a, b)`` with face ``f``."""
        emb = self.emb
        if emb.dart_face.get((a, b)) == f:
            return emb.face_of(b, a)
        return emb.face_of(a, b)

    def paths_through(self, face: int, avoid: int) -> list[int]:
        """Triplets containing ``face`` but not ``avoid``."""
        index = self.index
        adj = self.dual.neighbors(face)
        out: list[int] = []
        side = [h for h in adj if h != avoid]
        for i in range(len(side)):
            for j in range(i + 1, len(side)):
                _add(out, index.lookup(side[i], face, side[j]))
        for h in side:
            for k in self.dual.neighbors(h):
                if k != face and k != avoid:
                    _add(out, index.lookup(face, h, k))
        return out

    def t2_candidates(self, t: Triplet) -> list[int]:
        """Triplets other than ``t`` containing ``f`` and ``f2`` but not ``f1``."""
        index = self.index
        out: list[int] = []
        for h in self.dual.neighbors(t.f):
            if h != t.f1 and h != t.f2:
                _add(out, index.lookup(h, t.f, t.f2))
        for h in self.dual.neighbors(t.f2):
            if h != t.f:
                _add(out, index.lookup(t.f, t.f2, h))
        return out

    def tf1_candidates(self, t: Triplet) -> list[int]:
        """Triplets containing ``f1`` but not ``f`` that meet ``t`` exactly in ``f1``'s vertices."""
        f1_vertices = frozenset((t.u, t.w1, t.v1))
        vt = t.vertices
        return [s for s in self.paths_through(t.f1, t.f) if self.index.vertex_set(s) & vt == f1_vertices]

    # -- conditions -----------------------------------------------------------

    def _sparse_counts(self, t: Triplet) -> Iterable[list[int]]:
        vt = t.vertices
        adjacent = self.d.adjacent
        for v in sorted(vt):
            if self.g.degree(v) != 9:
                continue
            s = [x for x in self._neighbors(v) if x not in vt]
            yield [sum(1 for y in s if y != x and adjacent(x, y)) for x in s]

    def lemma13(self, t: Triplet) -> bool:
        return any(min(c) <= 1 for c in self._sparse_counts(t) if c)

    def lemma15(self, t: Triplet) -> bool:
        return any(max(c) <= 3 for c in self._sparse_counts(t) if c)

    def lemma18(self, t: Triplet) -> bool:
        index = self.index
        across = self._across(t.f2, t.v2, t.w2)
        first = []
        for s in self.paths_through(across, t.f2):
            ts = index.triplets[s]
            if t.e1 in ts.crossing_edges and t.e in ts.crossing_edges and index.face_disjoint(s, t.id):
                first.append(s)
        if not first:
            return False
        second = self.t2_candidates(t)
        return any(
            index.face_disjoint(a, b) and len(index.vertex_set(a) & index.vertex_set(b)) == 2
            for a in first for b in second
        )

    def lemma17(self, t: Triplet) -> bool:
        index = self.index
        s1 = [s for s in index.by_edge.get(t.e1, ()) if s != t.id]
        se = [s for s in index.by_edge.get(t.e, ()) if s != t.id]
        t2s = self.t2_candidates(t)
        tf1s = self.tf1_candidates(t)
        if not t2s or not tf1s:
            return False
        fd = index.face_disjoint
        pairs = [(a, b) for a in t2s for b in tf1s if fd(a, b)]
        if not pairs:
            return False
        if len(s1) < self.big and len(se) < self.big:
            return self._exhaustive17(t, s1, se, pairs)
        if len(se) >= self.big:
            if len(s1) >= self.scan:
                return True
            return any(self._first_ok(t, x, a, b) for a, b in pairs for x in s1)
        if len(se) >= self.scan:
            return True
        return any(self._edge_ok(t, y, a, b) for a, b in pairs for y in se)

    def _first_ok(self, t: Triplet, x: int, a: int, b: int) -> bool:
        fd = self.index.face_disjoint
        return (x != t.id and t.w1 not in self.index.vertex_set(x)
                and fd(x, t.id) and fd(x, a) and fd(x, b))

    def _edge_ok(self, t: Triplet, y: int, a: int, b: int) -> bool:
        fd = self.index.face_disjoint
        return (y != t.id and t.u not in self.index.vertex_set(y)
                and fd(y, t.id) and fd(y, a) and fd(y, b))

    def _exhaustive17(self, t: Triplet, s1: list[int], se: list[int], pairs: list[tuple[int, int]]) -> bool:
        fd = self.index.face_disjoint
        for a, b in pairs:
            for x in s1:
                if not self._first_ok(t, x, a, b):
                    continue
                for y in se:
                    if y != x and self._edge_ok(t, y, a, b) and fd(x, y):
                        return True
        return False

    def fires(self, t: Triplet) -> bool:
        if self.lemma13(t) or self.lemma15(t):
            return True
        return any(self.lemma18(view) or self.lemma17(view) for view in (t, t.mirrored()))


def _add(out: list[int], tid: int | None) -> None:
    if tid is not None and tid not in out:
        out.append(tid)


def label_triplets(index: TripletIndex, battery: Battery) -> None:
    """Label every triplet left unlabeled by the fast path."""
    for t in index.triplets:
        if index.labels[t.id] is TripletLabel.UNLABELED:
            index.labels[t.id] = TripletLabel.NON_FACIAL if battery.fires(t) else TripletLabel.FACIAL


def label_triplet(t: Triplet, battery: Battery) -> TripletLabel:
    return TripletLabel.NON_FACIAL if battery.fires(t) else TripletLabel.FACIAL
