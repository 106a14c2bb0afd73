"""Embedding of the potentially planar subgraph: planarity, 3-connectivity,
face audit, fan triangulation and the dual graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from .classify import CC, PP, EdgeClassification
from .errors import Rejected
from .graph import DegeneracyOrder, Graph

STAGE = "embed"


@dataclass(frozen=True)
class PlanarSubgraph:
    """The potentially planar edges of ``g`` on the full vertex set."""

    n: int
    edges: tuple[tuple[int, int], ...]
    source: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


def build_gp(g: Graph, cls: EdgeClassification) -> PlanarSubgraph:
    source = tuple(e for e, lab in enumerate(cls.labels) if lab is PP)
    return PlanarSubgraph(g.n, tuple(g.edges[e] for e in source), source)


class PlanarEmbedding:
    """Rotation system with counter-clockwise neighbour lists and its traced faces.

    The face to the left of the dart ``a -> b`` continues with ``b -> c`` where
    ``c`` precedes ``a`` in the rotation at ``b``. Each rotation list starts at
    its smallest neighbour; faces are numbered in order of discovery.
    """

    def __init__(self, rotation: Sequence[Sequence[int]], outer_dart: tuple[int, int] | None = None):
        rot = []
        for nbrs in rotation:
            nbrs = list(nbrs)
            if nbrs:
                k = nbrs.index(min(nbrs))
                nbrs = nbrs[k:] + nbrs[:k]
            rot.append(nbrs)
        self.rotation: list[list[int]] = rot
        self.n = len(rot)
        self.position: list[dict[int, int]] = [{w: i for i, w in enumerate(nbrs)} for nbrs in rot]
        self.faces: list[tuple[int, ...]] = []
        self.dart_face: dict[tuple[int, int], int] = {}
        self._trace()
        if outer_dart is None:
            outer_dart = next(((v, rot[v][0]) for v in range(self.n) if rot[v]), None)
        self.outer = self.dart_face[outer_dart] if outer_dart is not None else None

    def _trace(self) -> None:
        rot, pos, dart_face, faces = self.rotation, self.position, self.dart_face, self.faces
        for v in range(self.n):
            for w in rot[v]:
                if (v, w) in dart_face:
                    continue
                fid = len(faces)
                walk = []
                a, b = v, w
                while (a, b) not in dart_face:
                    dart_face[(a, b)] = fid
                    walk.append(a)
                    rb = rot[b]
                    a, b = b, rb[pos[b][a] - 1]
                faces.append(tuple(walk))

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def next_ccw(self, v: int, w: int) -> int:
        r = self.rotation[v]
        return r[(self.position[v][w] + 1) % len(r)]

    def prev_ccw(self, v: int, w: int) -> int:
        r = self.rotation[v]
        return r[self.position[v][w] - 1]

    def face_of(self, a: int, b: int) -> int:
        """Face to the left of the dart ``a -> b``."""
        return self.dart_face[(a, b)]

    def euler_characteristic(self) -> int:
        return self.n - self.edge_count + len(self.faces)

    def reflected(self) -> PlanarEmbedding:
        return PlanarEmbedding([nbrs[::-1] for nbrs in self.rotation])


def canonical_embedding(rotation: Sequence[Sequence[int]]) -> PlanarEmbedding:
    """Fix the reflection: at the smallest vertex with neighbours, the successor of
    its smallest neighbour must be smaller than that neighbour's predecessor.
    The outer face is the one to the left of the dart from that vertex to its
    smallest neighbour."""
    rot = [list(r) for r in rotation]
    v0 = next((v for v in range(len(rot)) if rot[v]), None)
    if v0 is None:
        return PlanarEmbedding(rot)
    r = rot[v0]
    k = r.index(min(r))
    r = r[k:] + r[:k]
    if len(r) >= 3 and r[1] > r[-1]:
        rot = [nbrs[::-1] for nbrs in rot]
    return PlanarEmbedding(rot, outer_dart=(v0, min(rot[v0])))


def _rejection(reason: str, witness: object = None) -> Rejected:
    return Rejected(STAGE, reason, witness)


def check_planar_3connected(gp: PlanarSubgraph) -> PlanarEmbedding:
    """Embed ``gp`` or raise :class:`Rejected` (not-planar, not-spanning, not-3-connected)."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(gp.n))
    nxg.add_edges_from(gp.edges)
    planar, emb = nx.check_planarity(nxg)
    if not planar:
        raise _rejection("not-planar")
    adj = gp.adjacency()
    for v in range(gp.n):
        if not adj[v]:
            raise _rejection("not-spanning", v)
    unreached = _unreached(adj)
    if unreached is not None:
        raise _rejection("not-spanning", unreached)
    if gp.n < 4:
        raise _rejection("not-3-connected")
    embedding = canonical_embedding([list(reversed(list(emb.neighbors_cw_order(v)))) for v in range(gp.n)])
    _check_3connected(embedding)
    return embedding


def _unreached(adj: list[list[int]]) -> int | None:
    n = len(adj)
    if n == 0:
        return None
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return next((v for v in range(n) if not seen[v]), None)


def _check_3connected(emb: PlanarEmbedding) -> None:
    """A connected plane graph on at least four vertices is 3-connected iff every
    face is a simple cycle, the minimum degree is 3, and any two faces share at
    most one vertex or exactly the two ends of a common edge.

    Shared vertices are counted on the vertex-face incidence graph by processing
    nodes in non-increasing degree order and deleting each after use, so that
    every 4-cycle of that graph is seen once and the total work stays linear.
    """
    n = emb.n
    for fid, walk in enumerate(emb.faces):
        if len(set(walk)) != len(walk):
            raise _rejection("not-3-connected", _repeated(walk))
    for v in range(n):
        if len(emb.rotation[v]) < 3:
            raise _rejection("not-3-connected", v)
    faces = emb.faces
    nodes = n + len(faces)
    adj: list[set[int]] = [set() for _ in range(nodes)]
    for fid, walk in enumerate(faces):
        for v in walk:
            adj[v].add(n + fid)
            adj[n + fid].add(v)
    order = sorted(range(nodes), key=lambda x: -len(adj[x]))
    via: dict[int, list[int]] = {}
    for a in order:
        via.clear()
        for b in adj[a]:
            for c in adj[b]:
                if c != a:
                    via.setdefault(c, []).append(b)
        for c, mids in via.items():
            if len(mids) >= 2 and not _benign(emb, a, c, mids):
                witness = (a, c) if a < n else tuple(sorted(mids))
                raise _rejection("not-3-connected", witness)
        for b in adj[a]:
            adj[b].discard(a)
        adj[a].clear()


def _repeated(walk: Sequence[int]) -> int:
    seen = set()
    for v in walk:
        if v in seen:
            return v
        seen.add(v)
    raise AssertionError("walk has no repeated vertex")


def _benign(emb: PlanarEmbedding, a: int, c: int, mids: list[int]) -> bool:
    """Whether nodes ``a`` and ``c`` sharing the neighbours ``mids`` in the
    vertex-face incidence graph are the ends of a common edge and its two faces."""
    if len(mids) != 2:
        return False
    n = emb.n
    if a < n:
        if c not in emb.position[a]:
            return False
        return {mids[0], mids[1]} == {n + emb.face_of(a, c), n + emb.face_of(c, a)}
    x, y = mids
    return y in emb.position[x] and {emb.face_of(x, y), emb.face_of(y, x)} == {a - n, c - n}


def face_audit(emb: PlanarEmbedding, d: DegeneracyOrder) -> None:
    """Every face must have length at most 5 and induce a clique of the input graph."""
    for fid, walk in enumerate(emb.faces):
        if len(walk) > 5:
            raise _rejection("face-too-long", fid)
        for i in range(len(walk)):
            for j in range(i + 2, len(walk)):
                if not d.adjacent(walk[i], walk[j]):
                    raise _rejection("face-not-clique", fid)


def triangulate(emb: PlanarEmbedding, cls: EdgeClassification, d: DegeneracyOrder) -> PlanarEmbedding:
    """Fan every 4- and 5-face from its smallest vertex, relabeling each chord as
    potentially planar. Returns the re-traced embedding; ``cls`` is updated in place."""
    rot = [list(r) for r in emb.rotation]
    for walk in emb.faces:
        k = len(walk)
        if k <= 3:
            continue
        i = walk.index(min(walk))
        apex = walk[i]
        targets = [walk[(i + s) % k] for s in range(2, k - 1)]
        # At a face corner the face wedge runs counter-clockwise from the next
        # boundary vertex to the previous one; chords go in between.
        ra = rot[apex]
        at = ra.index(walk[(i + 1) % k]) + 1
        ra[at:at] = targets
        for s in range(2, k - 1):
            j = (i + s) % k
            c = walk[j]
            rc = rot[c]
            at = rc.index(walk[(j + 1) % k]) + 1
            rc.insert(at, apex)
            e = d.edge_between(apex, c)
            if e is None:
                raise ValueError(f"chord ({apex},{c}) is not an edge; run face_audit first")
            if cls.labels[e] is CC:
                cls.relabel(e, PP, "triangulation")
    return canonical_embedding(rot)


@dataclass(frozen=True)
class DualGraph:
    """``arcs[f]`` lists ``(g, a, b)``: face ``g`` lies across the edge ``(a, b)`` of ``f``."""

    arcs: tuple[tuple[tuple[int, int, int], ...], ...]

    @property
    def node_count(self) -> int:
        return len(self.arcs)

    @property
    def arc_count(self) -> int:
        return sum(len(a) for a in self.arcs) // 2

    def neighbors(self, f: int) -> list[int]:
        return [g for g, _, _ in self.arcs[f]]


def dual(emb: PlanarEmbedding) -> DualGraph:
    arcs = []
    for walk in emb.faces:
        k = len(walk)
        arcs.append(tuple((emb.face_of(walk[(i + 1) % k], walk[i]), walk[i], walk[(i + 1) % k]) for i in range(k)))
    return DualGraph(tuple(arcs))
