"""Detection and repair of the ten-vertex configuration in which two potentially
planar edges cross.

Role names use a trailing ``p`` for primes: ``up`` is u', ``vp`` is v' and so on.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .classify import CC, PP, EdgeClassification
from .graph import DegeneracyOrder, Graph

ROLES = ("u", "up", "v", "w", "x", "xp", "y", "yp", "vp", "wp")

# The four 5-cliques whose union is the configuration.
CLIQUES = (
    ("u", "up", "v", "x", "xp"),
    ("u", "up", "w", "y", "yp"),
    ("u", "x", "y", "vp", "wp"),
    ("up", "xp", "yp", "vp", "wp"),
)
OPTIONAL = (("v", "vp"), ("w", "wp"))

REQUIRED_PLANAR = (
    ("u", "up"), ("v", "x"), ("v", "xp"), ("w", "y"), ("w", "yp"),
    ("x", "vp"), ("xp", "vp"), ("y", "wp"), ("yp", "wp"), ("vp", "wp"),
    ("u", "x"), ("u", "xp"), ("u", "y"), ("u", "yp"),
    ("up", "x"), ("up", "xp"), ("up", "y"), ("up", "yp"),
    ("u", "vp"), ("u", "wp"), ("up", "vp"), ("up", "wp"),
)
REQUIRED_CROSSING = (
    ("u", "v"), ("u", "w"), ("up", "v"), ("up", "w"),
    ("y", "vp"), ("yp", "vp"), ("x", "wp"), ("xp", "wp"),
)


def _key(a: str, b: str) -> frozenset[str]:
    return frozenset((a, b))


def role_edges() -> list[tuple[str, str]]:
    """The 34 edges of the configuration, without the two optional ones."""
    seen: list[tuple[str, str]] = []
    keys: set[frozenset[str]] = set()
    for clique in CLIQUES:
        for a, b in combinations(clique, 2):
            if _key(a, b) not in keys:
                keys.add(_key(a, b))
                seen.append((a, b))
    return seen


_EDGE_KEYS = frozenset(_key(a, b) for a, b in role_edges())
_PLANAR_KEYS = frozenset(_key(a, b) for a, b in REQUIRED_PLANAR)
_CROSSING_KEYS = frozenset(_key(a, b) for a, b in REQUIRED_CROSSING)
_OPTIONAL_KEYS = frozenset(_key(a, b) for a, b in OPTIONAL)


class AlreadyReclassified(RuntimeError):
    """A repair touched an edge already relabeled by an earlier instance."""

    def __init__(self, edge: int):
        super().__init__(f"edge {edge} was already reclassified")
        self.edge = edge


@dataclass(frozen=True)
class CrossBatInstance:
    roles: dict[str, int]
    base_edge: int
    optional_edges_present: tuple[bool, bool]
    repair_edges: tuple[int, int]

    def __getitem__(self, role: str) -> int:
        return self.roles[role]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.roles.values())


def _match(g: Graph, d: DegeneracyOrder, cls: EdgeClassification, roles: dict[str, int]) -> tuple[bool, bool] | None:
    """Check the induced subgraph and its labels against the pattern; return optional-edge flags."""
    for a, b in combinations(ROLES, 2):
        e = d.edge_between(roles[a], roles[b])
        key = _key(a, b)
        if key in _OPTIONAL_KEYS:
            continue
        if (e is not None) != (key in _EDGE_KEYS):
            return None
        if e is None:
            continue
        if key in _PLANAR_KEYS and cls.labels[e] is not PP:
            return None
        if key in _CROSSING_KEYS and cls.labels[e] is not CC:
            return None
    return tuple(d.adjacent(roles[a], roles[b]) for a, b in OPTIONAL)  # type: ignore[return-value]


def _instance_at(g: Graph, d: DegeneracyOrder, cls: EdgeClassification, e: int) -> CrossBatInstance | None:
    if cls.counts[e] != 8:
        return None
    u, up = g.edges[e]
    common = set(g.neighbors(u)) & set(g.neighbors(up))
    inner = sorted(common)
    adj = {a: {b for b in inner if b != a and d.adjacent(a, b)} for a in inner}
    low = [a for a in inner if len(adj[a]) + 2 in (4, 5)]
    if len(low) != 2:
        return None
    s = [a for a in inner if a not in low]
    s_set = set(s)
    hubs = sorted(a for a in s if len(adj[a] & s_set) == 5)
    if len(hubs) != 2:
        return None
    vp, wp = hubs
    rest = [a for a in s if a not in hubs]
    xs = []
    for a in rest:
        ea = d.edge_between(a, vp)
        if ea is not None and cls.labels[ea] is PP:
            xs.append(a)
    if len(xs) != 2:
        return None
    ys = [a for a in rest if a not in xs]
    vs = [a for a in low if all(x in adj[a] for x in xs)]
    if len(vs) != 1:
        return None
    v = vs[0]
    w = low[1] if low[0] == v else low[0]
    x, xp = sorted(xs)
    near = [a for a in ys if a in adj[x]]
    if len(near) != 1:
        return None
    y = near[0]
    yp = ys[1] if ys[0] == y else ys[0]
    roles = dict(u=u, up=up, v=v, w=w, x=x, xp=xp, y=y, yp=yp, vp=vp, wp=wp)
    flags = _match(g, d, cls, roles)
    if flags is None:
        return None
    repair = (d.edge_between(u, x), d.edge_between(u, y))
    return CrossBatInstance(roles, e, flags, repair)  # type: ignore[arg-type]


def find_crossbat_instances(g: Graph, d: DegeneracyOrder, cls: EdgeClassification) -> list[CrossBatInstance]:
    """All instances, found from their base edge (u,u'), sorted by base edge id."""
    found = []
    for e, (a, b) in enumerate(g.edges):
        if cls.labels[e] is PP and g.degree(a) == 9 and g.degree(b) == 9:
            inst = _instance_at(g, d, cls, e)
            if inst is not None:
                found.append(inst)
    return found


def fix_crossbat(instance: CrossBatInstance, cls: EdgeClassification) -> EdgeClassification:
    """Relabel (u,x) and (u,y) as clearly crossing, in place."""
    for e in instance.repair_edges:
        if cls.labels[e] is not PP:
            raise AlreadyReclassified(e)
        cls.relabel(e, CC, "crossbat-fix")
    return cls


def standalone_graph(optional: tuple[bool, bool] = (False, False)) -> tuple[Graph, dict[str, int]]:
    """The bare configuration on vertices 0..9 in role order."""
    from .graph import build_graph

    index = {role: i for i, role in enumerate(ROLES)}
    pairs = [(index[a], index[b]) for a, b in role_edges()]
    pairs += [(index[a], index[b]) for (a, b), on in zip(OPTIONAL, optional) if on]
    return build_graph(10, pairs), index
