import dataclasses
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pentarec import ParseError, Rejected, deserialize, random_pentangulation, saturate, serialize, verify_optimal
from pentarec.assemble import build_rotation_scheme, check_cover, pentagon_of
from pentarec.classify import CC, PP
from pentarec.triplets import TripletIndex, TripletLabel, forced_fast_path
from tests.constructions import run_to_triplets


def covered(g):
    d, cls, tri, dg, index = run_to_triplets(g)
    forced_fast_path(index, cls, g)
    return d, cls, tri, index


def cover_reason(index, tri, cls, g):
    with pytest.raises(Rejected) as info:
        check_cover(index, tri, cls, g)
    assert info.value.stage == "cover"
    return info.value.reason


def relabeled_index(triplets, face_count):
    index = TripletIndex(triplets, face_count)
    index.labels = [TripletLabel.FACIAL] * len(triplets)
    return index


def test_positive_cover(dodeca_sat):
    g, _ = dodeca_sat
    d, cls, tri, index = covered(g)
    assert len(check_cover(index, tri, cls, g)) == 12


def test_face_uncovered(dodeca_sat):
    g, _ = dodeca_sat
    d, cls, tri, index = covered(g)
    index.labels[0] = TripletLabel.NON_FACIAL
    assert cover_reason(index, tri, cls, g) == "face-uncovered"


def test_face_multicover(dodeca_sat):
    g, _ = dodeca_sat
    d, cls, tri, index = covered(g)
    twin = dataclasses.replace(index.triplets[0], id=len(index))
    assert cover_reason(relabeled_index(index.triplets + [twin], len(tri.faces)), tri, cls, g) == "face-multicover"


def test_edge_uncovered(dodeca_sat):
    g, _ = dodeca_sat
    d, cls, tri, index = covered(g)
    side = next(e for e, lab in enumerate(cls.labels) if lab is PP and cls.counts[e] == 6)
    cls.labels[side] = CC
    assert cover_reason(index, tri, cls, g) == "edge-uncovered"


def test_edge_multicover(dodeca_sat):
    g, _ = dodeca_sat
    d, cls, tri, index = covered(g)
    # a keeps its faces but takes b's crossing edges; b's edges come first by id,
    # so the double cover is met before a's now uncovered edges.
    a = max(index.triplets, key=lambda t: min(t.crossing_edges))
    b = min(index.triplets, key=lambda t: min(t.crossing_edges))
    bad = dataclasses.replace(a, e1=b.e1, e2=b.e2, e=b.e)
    triplets = [bad if t.id == a.id else t for t in index.triplets]
    assert cover_reason(relabeled_index(triplets, len(tri.faces)), tri, cls, g) == "edge-multicover"


@given(st.integers(1, 6), st.integers(0, 10_000))
def test_pentagons_rebuild_the_faces(k, seed):
    p = random_pentangulation(k, seed)
    g, _ = saturate(p)
    d, cls, tri, index = covered(g)
    chosen = check_cover(index, tri, cls, g)
    walks = {frozenset(pentagon_of(index, t, tri)) for t in chosen}
    assert walks == {frozenset(f) for f in p.faces}
    scheme = build_rotation_scheme(g, tri, index, chosen, d.edge_between)
    assert verify_optimal(g, scheme)
    assert scheme.crossing_pairs == 5 * len(chosen)


def test_reference_round_trip(dodeca_sat):
    g, ref = dodeca_sat
    text = serialize(ref)
    assert deserialize(text) == ref and deserialize(text.encode()) == ref
    assert serialize(deserialize(text)) == text
    doc = json.loads(text)
    assert set(doc) == {"n", "edges", "rotations", "crossings", "crossing_sides"}


def _corrupt(ref, **changes):
    doc = json.loads(serialize(ref))
    doc.update(changes)
    return json.dumps(doc)


@pytest.mark.parametrize("mutation", [
    lambda ref: "{not json",
    lambda ref: "[]",
    lambda ref: _corrupt(ref, n="20"),
    lambda ref: _corrupt(ref, n=0),
    lambda ref: _corrupt(ref, rotations=[[0]]),
    lambda ref: _corrupt(ref, edges=[[0, 99]]),
    lambda ref: _corrupt(ref, crossings=[[0, [1]], [0, [2]]]),
    lambda ref: _corrupt(ref, crossing_sides=[[0, [0]]]),
    lambda ref: _corrupt(ref, crossing_sides=[]),
    lambda ref: json.dumps({k: v for k, v in json.loads(serialize(ref)).items() if k != "edges"}),
])
def test_malformed_documents(mutation, dodeca_sat):
    with pytest.raises(ParseError):
        deserialize(mutation(dodeca_sat[1]))


def test_missing_field_is_named(dodeca_sat):
    doc = json.loads(serialize(dodeca_sat[1]))
    del doc["crossing_sides"]
    with pytest.raises(ParseError, match="crossing_sides"):
        deserialize(json.dumps(doc))
