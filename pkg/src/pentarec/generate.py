"""Positive instances from glued dodecahedra, negative instances by mutation,
and pentangulation import/export."""

from __future__ import annotations

import random
import struct
from typing import Sequence

from .assemble import RotationScheme, scheme_from_pentagons
from .classify import PLANAR_THRESHOLD, count_common_neighbors
from .embed import PlanarEmbedding, _check_3connected
from .errors import ParseError, Rejected
from .graph import Graph, build_graph, degeneracy_order


class GlueConflict(ValueError):
    pass


class SaturationConflict(ValueError):
    pass


class RetryBudgetExceeded(RuntimeError):
    pass


class ValidationFailure(ValueError):
    def __init__(self, invariant: str, detail: str = ""):
        super().__init__(f"{invariant}: {detail}" if detail else invariant)
        self.invariant = invariant


class Pentangulation:
    """Plane graph whose faces are all pentagons.

    ``rotation[v]`` lists the neighbours of ``v`` counter-clockwise and
    ``faces`` holds counter-clockwise boundary walks (the face lies to the left).
    """

    def __init__(self, rotation: Sequence[Sequence[int]], faces: Sequence[Sequence[int]] | None = None):
        self.rotation = [list(r) for r in rotation]
        if faces is None:
            faces = PlanarEmbedding(self.rotation).faces
        self.faces = [tuple(f) for f in faces]

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    @property
    def f(self) -> int:
        return len(self.faces)

    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v in range(self.n) for w in self.rotation[v] if v < w]

    def embedding(self) -> PlanarEmbedding:
        return PlanarEmbedding(self.rotation)

    def copy(self) -> Pentangulation:
        return Pentangulation(self.rotation, self.faces)

    def mirrored(self) -> Pentangulation:
        return Pentangulation([r[::-1] for r in self.rotation], [f[::-1] for f in self.faces])

    def validate(self) -> Pentangulation:
        """Raise :class:`ValidationFailure` naming the first violated invariant."""
        n = self.n
        for v, nbrs in enumerate(self.rotation):
            if v in nbrs or len(set(nbrs)) != len(nbrs):
                raise ValidationFailure("simplicity", f"vertex {v}")
            for w in nbrs:
                if not 0 <= w < n or v not in self.rotation[w]:
                    raise ValidationFailure("rotation", f"dart ({v},{w}) has no reverse")
        emb = self.embedding()
        if any(len(face) != 5 for face in emb.faces):
            raise ValidationFailure("face-length", "a face is not a pentagon")
        if emb.euler_characteristic() != 2:
            raise ValidationFailure("genus", f"V-E+F={emb.euler_characteristic()}")
        if n % 3 != 2:
            raise ValidationFailure("residue", f"n={n}")
        try:
            _check_3connected(emb)
        except Rejected as exc:
            raise ValidationFailure("3-connectivity", str(exc.witness)) from None
        return self


def rotation_from_faces(n: int, faces: Sequence[Sequence[int]]) -> list[list[int]]:
    """Counter-clockwise rotations of the plane graph with these (oriented) faces."""
    succ: list[dict[int, int]] = [{} for _ in range(n)]
    for walk in faces:
        k = len(walk)
        for i in range(k):
            a, v, b = walk[i - 1], walk[i], walk[(i + 1) % k]
            succ[v][b] = a
    rotation = []
    for v in range(n):
        s = succ[v]
        if not s:
            rotation.append([])
            continue
        start = min(s)
        order = [start]
        while s[order[-1]] != start:
            order.append(s[order[-1]])
        rotation.append(order)
    return rotation


def dodecahedron() -> Pentangulation:
    """Outer pentagon 0-4, a ten-cycle 5-14 and an inner pentagon 15-19."""
    outer = [0, 1, 2, 3, 4]
    mid = list(range(5, 15))
    inner = list(range(15, 20))
    faces = [tuple(outer), tuple(reversed(inner))]
    for i in range(5):
        faces.append((outer[i], mid[2 * i], mid[2 * i + 1], mid[(2 * i + 2) % 10], outer[(i + 1) % 5]))
        faces.append((mid[2 * i + 1], inner[i], inner[(i + 1) % 5], mid[(2 * i + 3) % 10], mid[(2 * i + 2) % 10]))
    return Pentangulation(rotation_from_faces(20, faces), faces)


# -- gluing ------------------------------------------------------------------


def _glue_into(p1: Pentangulation, face1: int, p2: Pentangulation, face2: int, alignment: int) -> None:
    """Identify face ``face2`` of ``p2`` with face ``face1`` of ``p1``, in place on ``p1``."""
    if not 0 <= alignment < 10:
        raise ValueError("alignment must lie in 0..9")
    if alignment >= 5:
        p2 = p2.mirrored()
    shift = alignment % 5
    a = p1.faces[face1]
    b = p2.faces[face2]
    # b[(shift - i) % 5] is identified with a[i]: walks run opposite ways, so
    # the two sides end up on opposite sides of the seam.
    image = {b[(shift - i) % 5]: a[i] for i in range(5)}
    n1 = p1.n
    for x in range(p2.n):
        if x not in image:
            image[x] = n1 + len(image) - 5
    seam = set(b)
    rot1 = p1.rotation
    for x in b:
        for y in p2.rotation[x]:
            if y in seam and y not in (b[(b.index(x) + 1) % 5], b[b.index(x) - 1]):
                if image[y] in rot1[image[x]]:
                    raise GlueConflict(f"edge ({image[x]},{image[y]}) would be doubled")
    new_rot: list[list[int]] = [[] for _ in range(p2.n - 5)]
    for x in range(p2.n):
        if x in seam:
            continue
        new_rot[image[x] - n1] = [image[y] for y in p2.rotation[x]]
    for i in range(5):
        v = a[i]
        j = (shift - i) % 5
        x = b[j]
        r1 = rot1[v]
        k = r1.index(a[i - 1])
        part1 = r1[k:] + r1[:k]
        r2 = p2.rotation[x]
        k2 = r2.index(b[(j - 1) % 5])
        part2 = r2[k2:] + r2[:k2]
        rot1[v] = part1 + [image[y] for y in part2[1:-1]]
    rot1.extend(new_rot)
    faces1 = p1.faces
    faces1[face1] = faces1[-1]
    faces1.pop()
    faces1.extend(tuple(image[x] for x in face) for k, face in enumerate(p2.faces) if k != face2)


def glue(p1: Pentangulation, face1: int, p2: Pentangulation, face2: int, alignment: int) -> Pentangulation:
    """Embed ``p2`` inside face ``face1`` of ``p1``, identifying the two boundary
    cycles. ``alignment`` 0..4 rotates the identification, +5 reflects ``p2``."""
    out = p1.copy()
    _glue_into(out, face1, p2, face2, alignment)
    return out


def random_pentangulation(k: int, seed: int, retries: int = 100) -> Pentangulation:
    """Glue ``k`` dodecahedra, each into a uniformly random face with a random alignment."""
    if k < 1:
        raise ValueError("k must be at least 1")
    rng = random.Random(seed)
    piece = dodecahedron()
    p = dodecahedron()
    for _ in range(k - 1):
        for _attempt in range(retries):
            face1 = rng.randrange(p.f)
            face2 = rng.randrange(piece.f)
            alignment = rng.randrange(10)
            try:
                _glue_into(p, face1, piece, face2, alignment)
                break
            except GlueConflict:
                continue
        else:
            raise RetryBudgetExceeded(f"no conflict-free glue after {retries} attempts")
    return p


def chain(k: int) -> Pentangulation:
    """Deterministic chain: each new dodecahedron is glued into the last face."""
    piece = dodecahedron()
    p = dodecahedron()
    for _ in range(k - 1):
        _glue_into(p, p.f - 1, piece, 0, 0)
    return p


# -- saturation ----------------------------------------------------------------


def saturate(p: Pentangulation) -> tuple[Graph, RotationScheme]:
    """Add the five chords of every face; return the graph and its pentagram scheme."""
    pairs = p.edges()
    index = {pair: e for e, pair in enumerate(pairs)}
    for face in p.faces:
        for i in range(5):
            a, b = face[i], face[(i + 2) % 5]
            key = (a, b) if a < b else (b, a)
            if key in index:
                raise SaturationConflict(f"chord {key} already present")
            index[key] = len(pairs)
            pairs.append(key)
    g = build_graph(p.n, pairs)

    def edge_id(a: int, b: int) -> int:
        return index[(a, b) if a < b else (b, a)]

    return g, scheme_from_pentagons(g.n, g.edges, p.faces, edge_id)


# -- pentagon-preserving flips ---------------------------------------------------


def flip_options(p: Pentangulation, a: int, b: int) -> list[tuple[int, int]]:
    """Replacement edges for ``(a, b)`` that re-split its two faces into pentagons."""
    merged = _merged_walk(p, a, b)
    out = []
    for k in (1, 2, 3):
        x, y = merged[k], merged[k + 4]
        if y not in p.rotation[x]:
            out.append((x, y))
    return out


def _merged_walk(p: Pentangulation, a: int, b: int) -> list[int]:
    left = right = None
    for face in p.faces:
        for i in range(5):
            if face[i] == a and face[(i + 1) % 5] == b:
                left = face[i:] + face[:i]
            if face[i] == b and face[(i + 1) % 5] == a:
                right = face[i:] + face[:i]
    if left is None or right is None:
        raise ValueError(f"({a},{b}) is not an edge")
    # right = (b, a, s, t, x), left = (a, b, p, q, r); merged: a s t x b p q r
    return [a, right[2], right[3], right[4], b, left[2], left[3], left[4]]


def flip(p: Pentangulation, a: int, b: int, new: tuple[int, int]) -> Pentangulation:
    """Remove ``(a, b)`` and add ``new`` across the merged octagon."""
    merged = _merged_walk(p, a, b)
    k = merged.index(new[0])
    if merged[(k + 4) % 8] != new[1]:
        raise ValueError("replacement must join opposite octagon corners")
    walk = merged[k:] + merged[:k]
    rot = [list(r) for r in p.rotation]
    rot[a].remove(b)
    rot[b].remove(a)
    x, y = walk[0], walk[4]
    rx = rot[x]
    rx.insert(rx.index(walk[1]) + 1, y)
    ry = rot[y]
    ry.insert(ry.index(walk[5]) + 1, x)
    faces = [f for f in p.faces if not _has_dart(f, a, b) and not _has_dart(f, b, a)]
    faces.append(tuple(walk[0:5]))
    faces.append(tuple(walk[4:8]) + (walk[0],))
    return Pentangulation(rot, faces)


def _has_dart(face: tuple[int, ...], a: int, b: int) -> bool:
    return any(face[i] == a and face[(i + 1) % 5] == b for i in range(5))


# -- import / export ---------------------------------------------------------------


def read_planar_code(data: bytes) -> list[list[list[int]]]:
    """Parse every embedding in a planar_code stream into counter-clockwise rotations.

    The format lists, per vertex, its 1-based neighbours in clockwise order,
    each list terminated by 0.
    """
    pos = 0
    little = True
    if data.startswith(b">>planar_code"):
        end = data.find(b"<<")
        if end < 0:
            raise ParseError("unterminated planar_code header")
        if b" be" in data[:end]:
            little = False
        pos = end + 2
    graphs = []
    while pos < len(data):
        n = data[pos]
        pos += 1
        wide = n == 0
        fmt = ("<" if little else ">") + "H"
        if wide:
            if pos + 2 > len(data):
                raise ParseError("truncated vertex count")
            (n,) = struct.unpack_from(fmt, data, pos)
            pos += 2
        rotation = []
        for v in range(n):
            nbrs = []
            while True:
                if wide:
                    if pos + 2 > len(data):
                        raise ParseError(f"truncated neighbour list of vertex {v + 1}")
                    (x,) = struct.unpack_from(fmt, data, pos)
                    pos += 2
                else:
                    if pos >= len(data):
                        raise ParseError(f"truncated neighbour list of vertex {v + 1}")
                    x = data[pos]
                    pos += 1
                if x == 0:
                    break
                if x > n:
                    raise ParseError(f"neighbour {x} of vertex {v + 1} exceeds n={n}")
                nbrs.append(x - 1)
            rotation.append(nbrs[::-1])
        graphs.append(rotation)
    if not graphs:
        raise ParseError("no graph in planar_code stream")
    return graphs


def write_planar_code(p: Pentangulation) -> bytes:
    wide = p.n > 255
    out = bytearray(b">>planar_code<<")
    if wide:
        out += b"\x00" + struct.pack("<H", p.n)
    else:
        out.append(p.n)
    for nbrs in p.rotation:
        for w in reversed(nbrs):
            out += struct.pack("<H", w + 1) if wide else bytes([w + 1])
        out += b"\x00\x00" if wide else b"\x00"
    return bytes(out)


def read_rotation_text(text: str) -> list[list[int]]:
    """Rotation-list text: a line with ``n``, then per vertex ``v: a b c ...``
    listing its neighbours counter-clockwise. Lines starting with '#' are comments."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty document")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError("expected the vertex count", line=lineno) from None
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} rotation lines, found {len(lines) - 1}", line=lineno)
    rotation: list[list[int]] = [[] for _ in range(n)]
    filled = [False] * n
    for lineno, ln in lines[1:]:
        label, _, rest = ln.partition(":")
        try:
            v = int(label)
            nbrs = [int(x) for x in rest.split()]
        except ValueError:
            raise ParseError("expected 'v: a b c ...'", line=lineno) from None
        if not 0 <= v < n or filled[v] or any(not 0 <= w < n for w in nbrs):
            raise ParseError("vertex out of range or repeated", line=lineno)
        rotation[v] = nbrs
        filled[v] = True
    return rotation


def write_rotation_text(p: Pentangulation) -> str:
    body = [f"{v}: " + " ".join(map(str, nbrs)) for v, nbrs in enumerate(p.rotation)]
    return "\n".join([str(p.n)] + body) + "\n"


def import_pentangulation(document: bytes | str) -> Pentangulation:
    """Read planar_code (first embedding) or rotation-list text and validate it."""
    if isinstance(document, bytes) and document.startswith(b">>planar_code"):
        rotation = read_planar_code(document)[0]
    else:
        if isinstance(document, bytes):
            try:
                document = document.decode("ascii")
            except UnicodeDecodeError:
                rotation = read_planar_code(document)[0]
                return Pentangulation(rotation).validate()
        rotation = read_rotation_text(document)
    for v, nbrs in enumerate(rotation):
        for w in nbrs:
            if v not in rotation[w]:
                raise ValidationFailure("rotation", f"dart ({v},{w}) has no reverse")
    return Pentangulation(rotation).validate()


# -- mutations -------------------------------------------------------------------

MUTATION_KINDS = ("edge-swap", "degree-breaker", "chord-retarget", "crossing-overload", "seam-scramble")
TARGETED_KINDS = ("edge-drop", "vertex-graft", "dense-core")


def _rebuild(g: Graph, removed: set[tuple[int, int]], added: list[tuple[int, int]], n: int | None = None) -> Graph:
    pairs = [p for p in g.edges if p not in removed]
    pairs.extend((a, b) if a < b else (b, a) for a, b in added)
    return build_graph(g.n if n is None else n, pairs)


def _non_edge(rng: random.Random, n: int, adj: list[set[int]], avoid: set[tuple[int, int]]) -> tuple[int, int]:
    while True:
        a, b = rng.randrange(n), rng.randrange(n)
        key = (min(a, b), max(a, b))
        if a != b and b not in adj[a] and key not in avoid:
            return key


def _double_swap(rng: random.Random, g: Graph, adj: list[set[int]], first: list[int], second: list[int],
                 far: bool = False, tries: int = 2000) -> Graph | None:
    """Replace edges (a,b), (c,d) by (a,c), (b,d), keeping every degree."""
    for _ in range(tries):
        e1, e2 = rng.choice(first), rng.choice(second)
        a, b = g.edges[e1]
        c, dd = g.edges[e2]
        if rng.random() < 0.5:
            c, dd = dd, c
        if len({a, b, c, dd}) < 4 or c in adj[a] or dd in adj[b]:
            continue
        if far and (adj[a] & adj[c] or adj[b] & adj[dd]):
            continue
        return _rebuild(g, {g.edges[e1], g.edges[e2]}, [(a, c), (b, dd)])
    return None


def mutate(g: Graph, kind: str, seed: int) -> Graph:
    """Return a graph differing from ``g`` in a constant number of edges.

    Besides the five general kinds, ``edge-drop``, ``vertex-graft`` and
    ``dense-core`` aim at the edge-count, residue and degeneracy prechecks.
    """
    rng = random.Random(seed)
    adj = g.neighbor_sets()
    m = g.m
    if kind == "edge-swap":
        e = rng.randrange(m)
        return _rebuild(g, {g.edges[e]}, [_non_edge(rng, g.n, adj, {g.edges[e]})])
    if kind == "degree-breaker":
        deg = g.degrees()
        heavy = [e for e, (a, b) in enumerate(g.edges) if deg[a] >= 12 and deg[b] >= 12]
        e = rng.choice(heavy) if heavy else rng.randrange(m)
        return _rebuild(g, {g.edges[e]}, [_non_edge(rng, g.n, adj, {g.edges[e]})])
    if kind in ("chord-retarget", "crossing-overload"):
        d = degeneracy_order(g)
        counts = count_common_neighbors(g, d)
        chords = [e for e in range(m) if counts[e] < PLANAR_THRESHOLD] or list(range(m))
        if kind == "chord-retarget":
            out = _double_swap(rng, g, adj, chords, chords)
        else:
            planar = [e for e in range(m) if counts[e] >= PLANAR_THRESHOLD] or list(range(m))
            out = _double_swap(rng, g, adj, planar, chords, far=True)
        return out if out is not None else mutate(g, "edge-swap", seed)
    if kind == "seam-scramble":
        deg = g.degrees()
        top = max(deg)
        hubs = {v for v in range(g.n) if deg[v] == top}
        near = [e for e, (a, b) in enumerate(g.edges) if a in hubs or b in hubs]
        out = _double_swap(rng, g, adj, near, near)
        return out if out is not None else mutate(g, "edge-swap", seed)
    if kind == "edge-drop":
        return _rebuild(g, {g.edges[rng.randrange(m)]}, [])
    if kind == "vertex-graft":
        z = g.n
        return _rebuild(g, set(), [(z, w) for w in rng.sample(range(g.n), 5)], n=g.n + 1)
    if kind == "dense-core":
        v = rng.randrange(g.n)
        core = set(adj[v]) | {v}
        others = [w for w in range(g.n) if w not in core]
        while len(core) < 12 and others:
            core.add(others.pop(rng.randrange(len(others))))
        members = sorted(core)
        added = [(a, b) for i, a in enumerate(members) for b in members[i + 1:] if b not in adj[a]]
        outside = [p for p in g.edges if p[0] not in core and p[1] not in core]
        removed = set(rng.sample(outside, min(len(added), len(outside))))
        return _rebuild(g, removed, added)
    raise ValueError(f"unknown mutation kind {kind!r}")
