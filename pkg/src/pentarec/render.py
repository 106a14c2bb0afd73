"""Straight-line SVG drawing from a barycentric embedding of the planarization."""

from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.linalg import spsolve

from .assemble import RotationScheme
from .verify import Planarization


def tutte_layout(plan: Planarization, radius: float = 1.0) -> np.ndarray:
    """Pin the longest face to a regular polygon; every other node sits at the
    average of its neighbours."""
    count = plan.node_count
    faces = plan.faces()
    outer = max(faces, key=len)
    pos = np.zeros((count, 2))
    k = len(outer)
    angles = np.pi / 2 + 2 * np.pi * np.arange(k) / k
    pos[outer, 0] = radius * np.cos(angles)
    pos[outer, 1] = radius * np.sin(angles)
    fixed = np.zeros(count, dtype=bool)
    fixed[outer] = True
    free = np.flatnonzero(~fixed)
    if free.size == 0:
        return pos
    slot = -np.ones(count, dtype=np.int64)
    slot[free] = np.arange(free.size)
    segs = np.asarray(plan.segments, dtype=np.int64).reshape(-1, 2)
    a, b = np.concatenate([segs[:, 0], segs[:, 1]]), np.concatenate([segs[:, 1], segs[:, 0]])
    degree = np.bincount(a, minlength=count).astype(float)
    inner = slot[a] >= 0
    rows, cols = slot[a[inner]], b[inner]
    both = slot[cols] >= 0
    lap = coo_matrix(
        (np.concatenate([degree[free], -np.ones(both.sum())]),
         (np.concatenate([np.arange(free.size), rows[both]]), np.concatenate([np.arange(free.size), slot[cols[both]]]))),
        shape=(free.size, free.size),
    ).tocsr()
    rhs = np.zeros((free.size, 2))
    pinned = ~both
    np.add.at(rhs, rows[pinned], pos[cols[pinned]])
    pos[free] = np.column_stack([spsolve(lap, rhs[:, 0]), spsolve(lap, rhs[:, 1])])
    return pos


def render_svg(scheme: RotationScheme, size: int = 800) -> str:
    plan = Planarization(scheme)
    pos = tutte_layout(plan)
    margin = 20
    scale = (size - 2 * margin) / 2
    xy = (pos * [scale, -scale]) + size / 2

    def pt(v: int) -> str:
        return f"{xy[v, 0]:.2f},{xy[v, 1]:.2f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        '<g fill="none" stroke-width="1">',
    ]
    per_edge: list[list[int]] = [[] for _ in range(scheme.m)]
    s = 0
    for e in range(scheme.m):
        for _ in range(len(scheme.crossings[e]) + 1):
            a, b = plan.segments[s]
            if not per_edge[e]:
                per_edge[e].append(a)
            per_edge[e].append(b)
            s += 1
    for e, chain in enumerate(per_edge):
        colour = "#c0392b" if scheme.crossings[e] else "#2c3e50"
        points = " ".join(pt(v) for v in chain)
        out.append(f'<polyline class="edge" data-edge="{e}" stroke="{colour}" points="{points}"/>')
    out.append("</g>")
    out.append('<g stroke="none">')
    for v in range(plan.node_count):
        if v < scheme.n:
            out.append(f'<circle class="vertex" cx="{xy[v, 0]:.2f}" cy="{xy[v, 1]:.2f}" r="4" fill="#2c3e50"/>')
        else:
            out.append(f'<circle class="crossing" cx="{xy[v, 0]:.2f}" cy="{xy[v, 1]:.2f}" r="1.5" fill="#c0392b"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
