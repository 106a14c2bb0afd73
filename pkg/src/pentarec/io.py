"""Edge-list and graph6 graph documents."""

from __future__ import annotations

from pathlib import Path

import networkx as nx

from .errors import ParseError
from .graph import Graph, build_graph

FORMATS = ("edgelist", "graph6")


def parse_edgelist(text: str) -> Graph:
    """Header ``n m`` followed by ``m`` lines ``u v`` (0-based); '#' starts a comment line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("missing header 'n m'", line=1)
    lineno, head = rows[0]
    n, m = _pair(head, lineno, "header 'n m'")
    if n < 0 or m < 0:
        raise ParseError("negative count in header", line=lineno)
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)}", line=lineno)
    pairs = []
    seen = set()
    for lineno, fields in body:
        u, v = _pair(fields, lineno, "edge 'u v'")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", line=lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"edge ({u},{v}) appears more than once", line=lineno)
        seen.add(key)
        pairs.append((u, v))
    return build_graph(n, pairs)


def _pair(fields: list[str], lineno: int, what: str) -> tuple[int, int]:
    if len(fields) != 2:
        raise ParseError(f"expected {what}", line=lineno)
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(f"expected {what}", line=lineno) from None


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    lines = [ln for ln in data.strip().splitlines() if ln.strip()]
    if len(lines) != 1:
        raise ParseError(f"expected exactly one graph6 line, found {len(lines)}")
    try:
        nxg = nx.from_graph6_bytes(lines[0].strip())
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise ParseError(f"invalid graph6: {exc}", line=1) from None
    return build_graph(nxg.number_of_nodes(), sorted((min(u, v), max(u, v)) for u, v in nxg.edges()))


def format_graph6(g: Graph) -> bytes:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nx.to_graph6_bytes(nxg, header=False)


def read_graph(path: str | Path, fmt: str = "edgelist") -> Graph:
    data = Path(path).read_bytes()
    if fmt == "graph6":
        return parse_graph6(data)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise ParseError("edge list is not UTF-8 text") from None
    return parse_edgelist(text)


def write_graph(g: Graph, path: str | Path, fmt: str = "edgelist") -> None:
    if fmt == "graph6":
        Path(path).write_bytes(format_graph6(g))
    else:
        Path(path).write_text(format_edgelist(g))
