"""End-to-end recognition: prechecks, classification, embedding of the potentially
planar subgraph, triplet labeling, cover check and certificate construction."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

from .assemble import RotationScheme, build_rotation_scheme, check_cover
from .classify import EdgeClassification, classify_edges, count_common_neighbors, preflight
from .crossbat import AlreadyReclassified, CrossBatInstance, find_crossbat_instances, fix_crossbat
from .embed import build_gp, check_planar_3connected, dual, face_audit, triangulate
from .errors import Rejected
from .graph import Graph, degeneracy_order
from .triplets import BIG, SCAN, Battery, TripletLabel, enumerate_triplets, forced_fast_path, label_triplets
from .verify import verify_optimal

log = logging.getLogger(__name__)


@dataclass
class Result:
    accepted: bool
    scheme: RotationScheme | None = None
    rejection: Rejected | None = None
    facial: list[tuple[int, ...]] = field(default_factory=list)
    stats: dict[str, object] = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.accepted

    def line(self) -> str:
        return "accept" if self.accepted else self.rejection.line()  # type: ignore[union-attr]


def recognize(g: Graph, diagnostic: bool = False, big: int = BIG, scan: int = SCAN) -> Result:
    """Decide whether ``g`` is optimal 2-planar; on acceptance attach a verified scheme.

    With ``diagnostic`` set, a failed precheck is recorded and the pipeline
    continues; the first recorded rejection is still the reported one.
    """
    start = time.perf_counter()
    stats: dict[str, object] = {"n": g.n, "m": g.m}
    result = Result(False, stats=stats)
    try:
        _run(g, diagnostic, big, scan, result)
    except Rejected as exc:
        if result.rejection is None:
            result.rejection = exc
        result.diagnostics.append(exc.line())
    except (IndexError, KeyError, ValueError, AssertionError) as exc:
        if result.rejection is None:
            # Only reachable past a diagnostic-mode precheck failure.
            result.rejection = Rejected("verify", "inconsistent", type(exc).__name__)
    if result.rejection is not None:
        result.accepted = False
        result.scheme = None
    stats["seconds"] = time.perf_counter() - start
    return result


def _run(g: Graph, diagnostic: bool, big: int, scan: int, result: Result) -> None:
    stats = result.stats
    d = degeneracy_order(g)
    report = preflight(g, d)
    if not report.passed:
        rej = Rejected("preflight", report.reason)  # type: ignore[arg-type]
        if not diagnostic:
            raise rej
        result.rejection = rej
        result.diagnostics.append(rej.line())

    counts = count_common_neighbors(g, d)
    cls = classify_edges(counts)
    stats["planar"] = len(cls.planar_edges())
    stats["crossing"] = len(cls.crossing_edges())
    instances = find_crossbat_instances(g, d, cls)
    stats["crossbat"] = len(instances)
    _apply_fixes(instances, cls)

    gp = build_gp(g, cls)
    emb = check_planar_3connected(gp)
    face_audit(emb, d)
    emb = triangulate(emb, cls, d)
    dual_graph = dual(emb)
    stats["faces"] = len(emb.faces)
    index = enumerate_triplets(emb, dual_graph, g, d)
    stats["triplets"] = len(index)
    forced_fast_path(index, cls, g)
    stats["forced"] = sum(1 for lab in index.labels if lab is TripletLabel.FACIAL_FORCED)
    label_triplets(index, Battery(index, emb, dual_graph, g, d, big, scan))
    chosen = check_cover(index, emb, cls, g)
    stats["facial"] = len(chosen)
    if result.rejection is not None:
        return
    scheme = build_rotation_scheme(g, emb, index, chosen, d.edge_between)
    verdict = verify_optimal(g, scheme)
    if not verdict:
        raise Rejected("verify", verdict.reason, verdict.detail)
    result.accepted = True
    result.scheme = scheme
    result.facial = [tuple(sorted(index.triplets[t].vertices)) for t in chosen]


def _apply_fixes(instances: list[CrossBatInstance], cls: EdgeClassification) -> None:
    for inst in instances:
        try:
            fix_crossbat(inst, cls)
        except AlreadyReclassified as exc:
            log.debug("overlapping configuration at base edge %d: %s", inst.base_edge, exc)
