"""Simple undirected graphs with a degeneracy ordering for constant-time adjacency."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence


class GraphError(ValueError):
    """Raised when an edge list does not describe a simple graph."""

    def __init__(self, message: str, pair: tuple[int, int]):
        super().__init__(message)
        self.pair = pair


class SelfLoop(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple graph on vertices ``0..n-1``.

    Edge ids follow input order and ``edges[e]`` is stored as ``(min, max)``.
    ``incidence[v]`` lists the ids of the edges at ``v`` in id order.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    incidence: tuple[tuple[int, ...], ...]
    labels: tuple[Hashable, ...] | None = field(default=None)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> list[int]:
        return [len(inc) for inc in self.incidence]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def neighbors(self, v: int) -> list[int]:
        edges = self.edges
        return [a if a != v else b for a, b in (edges[e] for e in self.incidence[v])]

    def neighbor_sets(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def label(self, v: int) -> Hashable:
        return v if self.labels is None else self.labels[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_pairs: Iterable[Sequence[int]], labels: Sequence[Hashable] | None = None) -> Graph:
    """Validate ``edge_pairs`` and build a :class:`Graph` with ids in input order."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    incidence: list[list[int]] = [[] for _ in range(n)]
    for pair in edge_pairs:
        a, b = int(pair[0]), int(pair[1])
        if not (0 <= a < n and 0 <= b < n):
            raise VertexOutOfRange(f"edge ({a},{b}) has an endpoint outside 0..{n - 1}", (a, b))
        if a == b:
            raise SelfLoop(f"self-loop at vertex {a}", (a, b))
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise ParallelEdge(f"edge ({a},{b}) appears more than once", (a, b))
        seen.add(key)
        incidence[a].append(len(edges))
        incidence[b].append(len(edges))
        edges.append(key)
    return Graph(
        n,
        tuple(edges),
        tuple(tuple(inc) for inc in incidence),
        None if labels is None else tuple(labels),
    )


def relabel(pairs: Iterable[tuple[Hashable, Hashable]]) -> Graph:
    """Build a graph from arbitrary vertex labels, numbering them by first appearance."""
    index: dict[Hashable, int] = {}
    dense: list[tuple[int, int]] = []
    for a, b in pairs:
        for x in (a, b):
            if x not in index:
                index[x] = len(index)
        dense.append((index[a], index[b]))
    return build_graph(len(index), dense, labels=list(index))


@dataclass(frozen=True, eq=False)
class DegeneracyOrder:
    """Minimum-degree elimination order.

    ``order[i]`` is the i-th vertex; ``back[v]`` maps each neighbour of ``v``
    that precedes it in the order to the id of the connecting edge.
    """

    order: tuple[int, ...]
    position: tuple[int, ...]
    back: tuple[dict[int, int], ...]
    degeneracy: int

    def adjacent(self, u: int, v: int) -> bool:
        if self.position[u] < self.position[v]:
            return u in self.back[v]
        return v in self.back[u]

    def edge_between(self, u: int, v: int) -> int | None:
        if self.position[u] < self.position[v]:
            return self.back[v].get(u)
        return self.back[u].get(v)


def degeneracy_order(g: Graph) -> DegeneracyOrder:
    """Repeatedly remove a minimum-degree vertex (lowest id on ties).

    The order lists vertices from last removed to first removed, so each
    vertex's back-list holds the neighbours still present when it was removed.
    """
    n = g.n
    deg = g.degrees()
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    removal: list[int] = []
    back: list[dict[int, int]] = [{} for _ in range(n)]
    edges = g.edges
    incidence = g.incidence
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != deg[v]:
            continue
        removed[v] = True
        removal.append(v)
        bv = back[v]
        for e in incidence[v]:
            a, b = edges[e]
            w = b if a == v else a
            if not removed[w]:
                bv[w] = e
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    order = removal[::-1]
    position = [0] * n
    for i, v in enumerate(order):
        position[v] = i
    degeneracy = max((len(b) for b in back), default=0)
    return DegeneracyOrder(tuple(order), tuple(position), tuple(back), degeneracy)


def adjacent(g: Graph, d: DegeneracyOrder, u: int, v: int) -> bool:
    return d.adjacent(u, v)


def edge_between(g: Graph, d: DegeneracyOrder, u: int, v: int) -> int | None:
    return d.edge_between(u, v)
