"""Independent certificate checking and a brute-force recognizer for small graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

import networkx as nx

from .assemble import RotationScheme
from .graph import Graph

VERIFY_REASONS = (
    "rotation-mismatch",
    "crossing-budget",
    "crossing-asymmetry",
    "degenerate-crossing",
    "disconnected",
    "euler-violation",
    "edge-count",
)


@dataclass(frozen=True)
class Verdict:
    valid: bool
    reason: str | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        return f"invalid {self.reason}" + (f" {self.detail}" if self.detail else "")


VALID = Verdict(True)


def _invalid(reason: str, detail: object = None) -> Verdict:
    return Verdict(False, reason, None if detail is None else str(detail))


class Planarization:
    """Each crossing becomes a degree-4 node splitting both edges.

    Darts ``2s`` and ``2s+1`` traverse segment ``s`` towards the higher and the
    lower endpoint of its edge respectively.
    """

    def __init__(self, scheme: RotationScheme):
        n, m = scheme.n, scheme.m
        edges = scheme.edges
        dummy: dict[tuple[int, int], int] = {}
        points: list[list[int]] = []
        for e in range(m):
            lo, hi = sorted(edges[e])
            chain = [lo]
            for f in scheme.crossings[e]:
                key = (e, f) if e < f else (f, e)
                if key not in dummy:
                    dummy[key] = n + len(dummy)
                chain.append(dummy[key])
            chain.append(hi)
            points.append(chain)
        self.n = n
        self.crossing_count = len(dummy)
        self.node_count = n + len(dummy)
        seg_start = [0] * (m + 1)
        ends: list[tuple[int, int]] = []
        for e in range(m):
            seg_start[e] = len(ends)
            chain = points[e]
            ends.extend(zip(chain, chain[1:]))
        seg_start[m] = len(ends)
        self.segments = ends
        self.edge_count = len(ends)

        rot: list[list[int]] = [[] for _ in range(self.node_count)]
        for v in range(n):
            out = rot[v]
            for e in scheme.rotations[v]:
                lo = points[e][0]
                out.append(2 * seg_start[e] if v == lo else 2 * (seg_start[e + 1] - 1) + 1)
        for e in range(m):
            for k, f in enumerate(scheme.crossings[e]):
                if e > f:
                    continue
                x = points[e][k + 1]
                kf = scheme.crossings[f].index(e)
                e_hi, e_lo = 2 * (seg_start[e] + k + 1), 2 * (seg_start[e] + k) + 1
                f_hi, f_lo = 2 * (seg_start[f] + kf + 1), 2 * (seg_start[f] + kf) + 1
                if scheme.sides[e][k] > 0:
                    rot[x] = [e_hi, f_hi, e_lo, f_lo]
                else:
                    rot[x] = [e_hi, f_lo, e_lo, f_hi]
        self.rotation = rot

    def _head(self, dart: int) -> int:
        a, b = self.segments[dart >> 1]
        return b if dart & 1 == 0 else a

    def faces(self) -> list[list[int]]:
        """Dart orbits of the face-tracing rule, each as its list of nodes."""
        rot = self.rotation
        pos = [0] * (2 * self.edge_count)
        for node_rot in rot:
            for i, dart in enumerate(node_rot):
                pos[dart] = i
        segments = self.segments
        seen = bytearray(2 * self.edge_count)
        out = []
        for start in range(2 * self.edge_count):
            if seen[start]:
                continue
            walk = []
            dart = start
            while not seen[dart]:
                seen[dart] = 1
                a, b = segments[dart >> 1]
                tail, head = (a, b) if dart & 1 == 0 else (b, a)
                walk.append(tail)
                hr = rot[head]
                dart = hr[pos[dart ^ 1] - 1]
            out.append(walk)
        return out

    def face_count(self) -> int:
        return len(self.faces())


def _connected(n: int, edges) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps <= 1


def verify_scheme(g: Graph, scheme: RotationScheme) -> Verdict:
    """Check that ``scheme`` describes a drawing of ``g`` with at most two crossings per edge."""
    if scheme.n != g.n or scheme.m != g.m:
        return _invalid("rotation-mismatch", "vertex or edge count differs")
    norm = [tuple(sorted(p)) for p in scheme.edges]
    if len(set(norm)) != len(norm) or set(norm) != set(g.edges) or any(a == b for a, b in norm):
        return _invalid("rotation-mismatch", "edge set differs")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for e, (a, b) in enumerate(norm):
        incident[a].append(e)
        incident[b].append(e)
    for v in range(g.n):
        if sorted(scheme.rotations[v]) != incident[v]:
            return _invalid("rotation-mismatch", v)
    for e in range(scheme.m):
        if len(scheme.crossings[e]) > 2:
            return _invalid("crossing-budget", e)
        if len(scheme.sides[e]) != len(scheme.crossings[e]):
            return _invalid("crossing-asymmetry", e)
    for e in range(scheme.m):
        partners = scheme.crossings[e]
        if len(set(partners)) != len(partners):
            return _invalid("degenerate-crossing", e)
        for k, f in enumerate(partners):
            if e not in scheme.crossings[f]:
                return _invalid("crossing-asymmetry", (e, f))
            kf = scheme.crossings[f].index(e)
            if scheme.sides[f][kf] != -scheme.sides[e][k]:
                return _invalid("crossing-asymmetry", (e, f))
    for e in range(scheme.m):
        for f in scheme.crossings[e]:
            if f == e or set(norm[e]) & set(norm[f]):
                return _invalid("degenerate-crossing", (e, f))
    if not _connected(g.n, norm):
        return _invalid("disconnected")
    if scheme.m == 0:
        return VALID
    plan = Planarization(scheme)
    faces = plan.face_count()
    if plan.node_count - plan.edge_count + faces != 2:
        return _invalid("euler-violation", f"V={plan.node_count} E={plan.edge_count} F={faces}")
    return VALID


def verify_optimal(g: Graph, scheme: RotationScheme) -> Verdict:
    verdict = verify_scheme(g, scheme)
    if not verdict:
        return verdict
    if g.m != 5 * g.n - 10:
        return _invalid("edge-count", f"m={g.m} n={g.n}")
    return VALID


# -- brute force oracle ------------------------------------------------------


ORACLE_LIMIT = 40


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    accepted: bool
    faces: tuple[tuple[int, ...], ...] = ()

    def __bool__(self) -> bool:
        return self.accepted

    @property
    def cliques(self) -> set[frozenset[int]]:
        return {frozenset(f) for f in self.faces}


def five_cliques(adj: list[set[int]]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def grow(clique: list[int], cand: set[int]) -> None:
        if len(clique) == 5:
            out.append(tuple(clique))
            return
        for w in sorted(cand):
            if w > clique[-1]:
                grow(clique + [w], cand & adj[w])

    for v in range(len(adj)):
        grow([v], {w for w in adj[v] if w > v})
    return out


def _cycles(clique: tuple[int, ...]):
    first, rest = clique[0], clique[1:]
    for perm in permutations(rest):
        if perm[0] < perm[-1]:
            yield (first,) + perm


def oracle_recognize(g: Graph, limit: int = ORACLE_LIMIT) -> OracleResult:
    """Search for pentagon boundaries on 5-cliques that make ``g`` a saturated
    3-connected pentangulation. Exponential; intended for ``n <= limit``."""
    if g.n > limit:
        raise TooLarge(f"n={g.n} exceeds the oracle bound {limit}")
    if g.m != 5 * g.n - 10 or g.n < 5:
        return OracleResult(False)
    adj = g.neighbor_sets()
    eid = {p: e for e, p in enumerate(g.edges)}

    def key(a: int, b: int) -> int:
        return eid[(a, b) if a < b else (b, a)]

    crossing = {e for e, (a, b) in enumerate(g.edges) if len(adj[a] & adj[b]) < 6}
    candidates = []
    for clique in five_cliques(adj):
        cset = frozenset(clique)
        for cyc in _cycles(clique):
            boundary = [key(cyc[i], cyc[(i + 1) % 5]) for i in range(5)]
            if crossing.intersection(boundary):
                continue
            chords = [key(cyc[i], cyc[(i + 2) % 5]) for i in range(5)]
            candidates.append((cyc, cset, tuple(boundary), tuple(chords)))
    touching: list[list[int]] = [[] for _ in range(g.m)]
    for c, (_, _, boundary, chords) in enumerate(candidates):
        for e in boundary + chords:
            touching[e].append(c)

    as_chord = [False] * g.m
    border = [0] * g.m
    chosen: list[int] = []

    def fits(c: int) -> bool:
        _, cset, boundary, chords = candidates[c]
        if any(as_chord[e] or border[e] for e in chords):
            return False
        if any(as_chord[e] or border[e] >= 2 for e in boundary):
            return False
        return all(len(cset & candidates[o][1]) <= 2 for o in chosen)

    def options(e: int) -> list[int]:
        if border[e] == 0:
            return [c for c in touching[e] if fits(c)]
        return [c for c in touching[e] if e in candidates[c][2] and fits(c)]

    def apply(c: int, sign: int) -> None:
        _, _, boundary, chords = candidates[c]
        for e in chords:
            as_chord[e] = sign > 0
        for e in boundary:
            border[e] += sign

    def search():
        best = None
        for e in range(g.m):
            if as_chord[e] or border[e] == 2:
                continue
            opts = options(e)
            if best is None or len(opts) < len(best):
                best = opts
                if not opts:
                    return
        if best is None:
            faces = [candidates[c][0] for c in chosen]
            if _is_sphere(g.n, faces):
                yield tuple(faces)
            return
        for c in best:
            chosen.append(c)
            apply(c, 1)
            yield from search()
            apply(c, -1)
            chosen.pop()

    for faces in search():
        return OracleResult(True, faces)
    return OracleResult(False)


def _is_sphere(n: int, faces: list[tuple[int, ...]]) -> bool:
    """Faces glue to a 3-connected pentangulation of the sphere spanning all vertices."""
    link: dict[int, dict[int, list[int]]] = {}
    edges = set()
    for f in faces:
        for i in range(5):
            a, v, b = f[i - 1], f[i], f[(i + 1) % 5]
            lk = link.setdefault(v, {})
            lk.setdefault(a, []).append(b)
            lk.setdefault(b, []).append(a)
            edges.add(frozenset((v, b)))
    if len(link) != n:
        return False
    for v, lk in link.items():
        if any(len(x) != 2 for x in lk.values()):
            return False
        start = next(iter(lk))
        prev, cur, steps = None, start, 0
        while True:
            a, b = lk[cur]
            nxt = a if a != prev else b
            prev, cur = cur, nxt
            steps += 1
            if cur == start:
                break
        if steps != len(lk):
            return False
    if n - len(edges) + len(faces) != 2:
        return False
    p = nx.Graph()
    p.add_edges_from(tuple(e) for e in edges)
    return nx.node_connectivity(p) >= 3
