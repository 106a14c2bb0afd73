import pytest
from hypothesis import given
from hypothesis import strategies as st

from pentarec import Rejected, random_pentangulation, saturate
from pentarec.classify import CC, PP
from pentarec.triplets import BIG, SCAN, Battery, TripletLabel, forced_fast_path, label_triplets
from tests.constructions import PLANTED, crossbat_graph, crossbat_pentangulation, run_to_triplets


def facial_sets(p):
    return {frozenset(f) for f in p.faces}


def test_thresholds():
    assert (BIG, SCAN) == (82, 63)


@given(st.integers(1, 8), st.integers(0, 10_000))
def test_triplets_are_exactly_the_faces(k, seed):
    p = random_pentangulation(k, seed)
    g, _ = saturate(p)
    d, cls, tri, dg, index = run_to_triplets(g)
    assert {t.vertices for t in index.triplets} == facial_sets(p)
    adj = g.neighbor_sets()
    for t in index.triplets:
        assert all(b in adj[a] for a in t.vertices for b in t.vertices if a != b)
        assert all(cls.labels[e] is CC for e in t.crossing_edges)
        assert t.f1 in dg.neighbors(t.f) and t.f2 in dg.neighbors(t.f)
        assert index.lookup(t.f1, t.f, t.f2) == index.lookup(t.f2, t.f, t.f1) == t.id


def test_crossbat_host_uses_the_other_scheme():
    d, cls, tri, dg, index = run_to_triplets(crossbat_graph())
    found = {t.vertices for t in index.triplets}
    built = facial_sets(crossbat_pentangulation())
    # The repair crosses (u,x) and (u,y): the twins u, u' trade places in the
    # cliques through x, y and through x', y'.
    u, up, x, xp, y, yp, vp, wp = PLANTED["u"], PLANTED["up"], PLANTED["x"], PLANTED["xp"], \
        PLANTED["y"], PLANTED["yp"], PLANTED["vp"], PLANTED["wp"]
    assert built - found == {frozenset((u, x, y, vp, wp)), frozenset((up, xp, yp, vp, wp))}
    assert found - built == {frozenset((up, x, y, vp, wp)), frozenset((u, xp, yp, vp, wp))}


def test_mirror_is_an_involution(dodeca_sat):
    index = run_to_triplets(dodeca_sat[0])[-1]
    for t in index.triplets:
        m = t.mirrored()
        assert m.mirrored() == t and m.vertices == t.vertices
        assert set(m.crossing_edges) == set(t.crossing_edges) and m.e == t.e


def test_fast_path_forces_every_triplet_of_a_positive(glued2_sat):
    g, _ = glued2_sat
    d, cls, tri, dg, index = run_to_triplets(g)
    forced_fast_path(index, cls, g)
    assert all(lab is TripletLabel.FACIAL_FORCED for lab in index.labels)
    assert len(index) == 22


@given(st.integers(1, 5), st.integers(0, 10_000))
def test_battery_never_fires_on_a_true_face(k, seed):
    g, _ = saturate(random_pentangulation(k, seed))
    d, cls, tri, dg, index = run_to_triplets(g)
    battery = Battery(index, tri, dg, g, d)
    assert not any(battery.fires(t) for t in index.triplets)
    label_triplets(index, battery)
    assert all(lab is TripletLabel.FACIAL for lab in index.labels)


def test_uncoverable_edge(dodeca_sat):
    g, _ = dodeca_sat
    d, cls, tri, dg, index = run_to_triplets(g)
    # A pentagon side relabeled as crossing lies on no triplet.
    side = next(e for e, lab in enumerate(cls.labels) if lab is PP and cls.counts[e] == 6)
    cls.relabel(side, CC, "test")
    with pytest.raises(Rejected) as info:
        forced_fast_path(index, cls, g)
    assert (info.value.stage, info.value.reason, info.value.witness) == ("triplets", "uncoverable-edge", g.edges[side])
