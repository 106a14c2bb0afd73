import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pentarec import Rejected, dodecahedron, mutate, random_pentangulation, recognize, saturate, verify_optimal
from tests.constructions import crossbat_graph, double_swap, face_too_long_candidate, relabeled
from tests.oracles import expected_stage

LINE = re.compile(r"reject (preflight|embed|triplets|cover|verify) [a-z0-9-]+( \S+)?")


def test_dodecahedron(dodeca_sat):
    g, _ = dodeca_sat
    result = recognize(g)
    assert result and result.line() == "accept" and result.rejection is None
    assert verify_optimal(g, result.scheme)
    assert sorted(result.facial) == sorted(tuple(sorted(f)) for f in dodecahedron().faces)
    assert {k: result.stats[k] for k in ("planar", "crossing", "faces", "triplets", "facial")} == \
        {"planar": 30, "crossing": 60, "faces": 36, "triplets": 12, "facial": 12}


@given(st.integers(1, 30), st.integers(0, 2**32))
def test_saturations_are_accepted(k, seed):
    p = random_pentangulation(k, seed)
    g, _ = saturate(p)
    result = recognize(g)
    assert result, result.line()
    assert verify_optimal(g, result.scheme)
    assert set(result.facial) == {tuple(sorted(f)) for f in p.faces}


@given(st.integers(0, 10_000))
def test_acceptance_is_invariant_under_relabeling(seed):
    assert recognize(relabeled(saturate(random_pentangulation(3, seed % 7))[0], seed))


def test_reject_lines_are_machine_readable(dodeca_sat):
    g, _ = dodeca_sat
    for kind in ("edge-drop", "vertex-graft", "degree-breaker", "edge-swap", "chord-retarget"):
        for seed in range(5):
            result = recognize(mutate(g, kind, seed))
            assert not result and result.scheme is None
            assert LINE.fullmatch(result.line()), result.line()


def test_diagnostic_mode_continues_past_prechecks(dodeca_sat):
    result = recognize(mutate(dodeca_sat[0], "edge-drop", 0), diagnostic=True)
    assert result.line() == "reject preflight edge-count"
    assert result.diagnostics[0] == "reject preflight edge-count"
    assert len(result.diagnostics) >= 2 and result.diagnostics[1].startswith("reject embed")
    assert recognize(mutate(dodeca_sat[0], "edge-drop", 0)).diagnostics == ["reject preflight edge-count"]


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("base", ["dodeca", "crossbat"])
def test_swaps_match_the_oracle_stage(base, seed, dodeca_sat):
    g = dodeca_sat[0] if base == "dodeca" else crossbat_graph()
    h = double_swap(g, seed)
    stage, reasons = expected_stage(h)
    result = recognize(h)
    assert (result.rejection.stage, result.rejection.reason in reasons) == (stage, True), result.line()


@pytest.mark.parametrize("seed", [0, 1])
def test_face_too_long(seed):
    h = face_too_long_candidate(seed)
    assert expected_stage(h) == ("embed", {"face-too-long"})
    assert recognize(h).line().startswith("reject embed face-too-long")


def test_crossbat_without_the_fix_looks_non_planar(monkeypatch):
    import sys

    module = sys.modules["pentarec.recognize"]
    monkeypatch.setattr(module, "_apply_fixes", lambda instances, cls: None)
    assert recognize(crossbat_graph()).line() == "reject embed not-planar"


def test_safety_net_reports_verify_stage(dodeca_sat, monkeypatch):
    import sys

    from pentarec.verify import Verdict

    module = sys.modules["pentarec.recognize"]
    monkeypatch.setattr(module, "verify_optimal", lambda g, s: Verdict(False, "euler-violation", "x"))
    result = recognize(dodeca_sat[0])
    assert not result and result.line() == "reject verify euler-violation x"


def test_rejected_line_format():
    assert Rejected("embed", "face-too-long", 3).line() == "reject embed face-too-long 3"
    assert Rejected("triplets", "uncoverable-edge", (1, 2)).line() == "reject triplets uncoverable-edge 1,2"
    assert Rejected("preflight", "residue").line() == "reject preflight residue"
