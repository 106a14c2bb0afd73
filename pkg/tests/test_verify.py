import dataclasses

import pytest

from pentarec import (
    RotationScheme,
    build_graph,
    dodecahedron,
    mutate,
    oracle_recognize,
    random_pentangulation,
    saturate,
    verify_optimal,
    verify_scheme,
)
from pentarec.verify import Planarization, TooLarge, five_cliques


def with_crossings(ref, crossings, sides):
    return dataclasses.replace(ref, crossings=tuple(map(tuple, crossings)), sides=tuple(map(tuple, sides)))


def test_reference_is_valid(dodeca_sat):
    g, ref = dodeca_sat
    assert verify_optimal(g, ref) and str(verify_optimal(g, ref)) == "valid"
    plan = Planarization(ref)
    assert (plan.node_count, plan.edge_count, plan.face_count()) == (80, 210, 132)


def test_crossing_budget(dodeca_sat):
    g, ref = dodeca_sat
    cross, sides = [list(c) for c in ref.crossings], [list(s) for s in ref.sides]
    e = next(e for e in range(ref.m) if len(cross[e]) == 2)
    f = next(f for f in range(ref.m) if f not in cross[e] and f != e and not cross[f])
    cross[e].append(f)
    sides[e].append(1)
    assert verify_scheme(g, with_crossings(ref, cross, sides)).reason == "crossing-budget"


def test_crossing_asymmetry_from_sides(dodeca_sat):
    g, ref = dodeca_sat
    sides = [list(s) for s in ref.sides]
    e = next(e for e in range(ref.m) if sides[e])
    sides[e][0] = -sides[e][0]
    assert verify_scheme(g, with_crossings(ref, ref.crossings, sides)).reason == "crossing-asymmetry"


def test_crossing_asymmetry_from_partner(dodeca_sat):
    g, ref = dodeca_sat
    cross, sides = [list(c) for c in ref.crossings], [list(s) for s in ref.sides]
    e = next(e for e in range(ref.m) if len(cross[e]) == 2)
    f = cross[e].pop()
    sides[e].pop()
    assert e in cross[f]
    assert verify_scheme(g, with_crossings(ref, cross, sides)).reason == "crossing-asymmetry"


def test_adjacent_edges_cannot_cross(dodeca_sat):
    g, ref = dodeca_sat
    a, b = g.edges[0]
    f = next(f for f, p in enumerate(g.edges) if f != 0 and a in p)
    cross = [[] for _ in range(ref.m)]
    sides = [[] for _ in range(ref.m)]
    cross[0], cross[f] = [f], [0]
    sides[0], sides[f] = [1], [-1]
    assert verify_scheme(g, with_crossings(ref, cross, sides)).reason == "degenerate-crossing"


def test_rotation_mismatch(dodeca_sat):
    g, ref = dodeca_sat
    rot = list(ref.rotations)
    rot[0], rot[1] = rot[1], rot[0]
    assert verify_scheme(g, dataclasses.replace(ref, rotations=tuple(rot))).reason == "rotation-mismatch"
    other = build_graph(g.n, list(g.edges[1:]) + [(0, 19) if (0, 19) not in g.edges else (0, 18)])
    assert verify_scheme(other, ref).reason == "rotation-mismatch"


def test_scrambled_rotation_breaks_euler(dodeca_sat):
    g, ref = dodeca_sat
    rot = list(ref.rotations)
    r = list(rot[0])
    r[0], r[1] = r[1], r[0]
    rot[0] = tuple(r)
    verdict = verify_scheme(g, dataclasses.replace(ref, rotations=tuple(rot)))
    assert verdict.reason == "euler-violation"


def test_disconnected():
    g = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    rotations = tuple(tuple(e for e, p in enumerate(g.edges) if v in p) for v in range(6))
    empty = tuple(() for _ in range(6))
    scheme = RotationScheme(6, g.edges, rotations, empty, empty)
    assert verify_scheme(g, scheme).reason == "disconnected"


def test_planar_drawing_is_not_optimal():
    p = dodecahedron()
    g = build_graph(p.n, p.edges())
    eid = {e: i for i, e in enumerate(g.edges)}
    rotations = tuple(tuple(eid[(min(v, w), max(v, w))] for w in p.rotation[v]) for v in range(p.n))
    empty = tuple(() for _ in range(g.m))
    scheme = RotationScheme(g.n, g.edges, rotations, empty, empty)
    assert verify_scheme(g, scheme)
    assert verify_optimal(g, scheme).reason == "edge-count"


def test_five_cliques_of_the_saturation(dodeca_sat):
    g, _ = dodeca_sat
    cliques = {frozenset(c) for c in five_cliques(g.neighbor_sets())}
    assert cliques == {frozenset(f) for f in dodecahedron().faces}


@pytest.mark.parametrize("k, seed", [(1, 0), (2, 0), (2, 7)])
def test_oracle_accepts_saturations(k, seed):
    p = random_pentangulation(k, seed)
    g, _ = saturate(p)
    result = oracle_recognize(g)
    assert result and result.cliques == {frozenset(f) for f in p.faces}


@pytest.mark.parametrize("kind", ["edge-swap", "chord-retarget", "seam-scramble"])
def test_oracle_rejects_mutants(kind, dodeca_sat):
    for seed in range(5):
        assert not oracle_recognize(mutate(dodeca_sat[0], kind, seed))


def test_oracle_bound():
    g, _ = saturate(random_pentangulation(3, 0))
    with pytest.raises(TooLarge):
        oracle_recognize(g)
