"""Necessary-condition prechecks and potentially-planar / clearly-crossing edge labels."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

from .graph import DegeneracyOrder, Graph

PLANAR_THRESHOLD = 6
PREFLIGHT_REASONS = ("edge-count", "residue", "degeneracy", "min-degree", "divisibility")


@dataclass(frozen=True)
class PreflightReport:
    n: int
    m: int
    n_mod_3: int
    degeneracy: int
    min_degree: int
    degrees_divisible_by_3: bool
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.reason is None

    @property
    def verdict(self) -> str:
        return "pass" if self.reason is None else f"reject({self.reason})"


def preflight(g: Graph, d: DegeneracyOrder) -> PreflightReport:
    """Check the edge count, residue, degeneracy and degree conditions, in that order."""
    degrees = g.degrees()
    min_degree = min(degrees, default=0)
    divisible = all(x % 3 == 0 for x in degrees)
    failures = (
        g.m != 5 * g.n - 10,
        g.n % 3 != 2,
        d.degeneracy > 9,
        min_degree < 9,
        not divisible,
    )
    reason = next((r for r, bad in zip(PREFLIGHT_REASONS, failures) if bad), None)
    return PreflightReport(g.n, g.m, g.n % 3, d.degeneracy, min_degree, divisible, reason)


def count_common_neighbors(g: Graph, d: DegeneracyOrder) -> list[int]:
    """Return ``|N(u) ∩ N(v)|`` for every edge, counting each triangle at its latest vertex."""
    counts = [0] * g.m
    back = d.back
    position = d.position
    for v in reversed(d.order):
        items = list(back[v].items())
        k = len(items)
        for i in range(k):
            a, ea = items[i]
            pa = position[a]
            back_a = back[a]
            for j in range(i + 1, k):
                b, eb = items[j]
                if pa < position[b]:
                    eab = back[b].get(a)
                else:
                    eab = back_a.get(b)
                if eab is not None:
                    counts[ea] += 1
                    counts[eb] += 1
                    counts[eab] += 1
    return counts


class Label(Enum):
    POTENTIALLY_PLANAR = "potentially-planar"
    CLEARLY_CROSSING = "clearly-crossing"


PP = Label.POTENTIALLY_PLANAR
CC = Label.CLEARLY_CROSSING


class Reclassification(NamedTuple):
    edge: int
    old: Label
    new: Label
    cause: str


@dataclass
class EdgeClassification:
    """Per-edge labels and common-neighbour counts with a log of every relabeling."""

    counts: list[int]
    labels: list[Label]
    log: list[Reclassification] = field(default_factory=list)

    def is_planar(self, e: int) -> bool:
        return self.labels[e] is PP

    def relabel(self, e: int, new: Label, cause: str) -> None:
        old = self.labels[e]
        self.labels[e] = new
        self.log.append(Reclassification(e, old, new, cause))

    def planar_edges(self) -> list[int]:
        return [e for e, lab in enumerate(self.labels) if lab is PP]

    def crossing_edges(self) -> list[int]:
        return [e for e, lab in enumerate(self.labels) if lab is CC]

    def copy(self) -> EdgeClassification:
        return EdgeClassification(list(self.counts), list(self.labels), list(self.log))


def classify_edges(counts: list[int]) -> EdgeClassification:
    labels = [PP if c >= PLANAR_THRESHOLD else CC for c in counts]
    return EdgeClassification(list(counts), labels)
