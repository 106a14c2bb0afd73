import re
import shutil
import subprocess
import sys

import pytest

from pentarec import build_graph, deserialize, verify_optimal
from pentarec.cli import main
from pentarec.io import read_graph, write_graph


@pytest.fixture
def dodeca_files(tmp_path):
    graph, ref = tmp_path / "dodeca.txt", tmp_path / "dodeca.json"
    assert main(["generate", "dodeca", "-o", str(graph), "--reference", str(ref)]) == 0
    return graph, ref


def test_generate_dodeca(dodeca_files):
    g = read_graph(dodeca_files[0])
    assert (g.n, g.m) == (20, 90)
    assert verify_optimal(g, deserialize(dodeca_files[1].read_text()))


def test_generate_glue(tmp_path):
    out = tmp_path / "g.txt"
    assert main(["generate", "glue", "--k", "2", "--seed", "3", "-o", str(out)]) == 0
    g = read_graph(out)
    assert (g.n, g.m) == (35, 165)


def test_seed_from_environment(tmp_path, monkeypatch):
    a, b = tmp_path / "a", tmp_path / "b"
    monkeypatch.setenv("PENTAREC_SEED", "11")
    main(["generate", "glue", "--k", "4", "-o", str(a)])
    main(["generate", "glue", "--k", "4", "--seed", "11", "-o", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_recognize_accepts_and_emits(dodeca_files, tmp_path, capsys):
    cert = tmp_path / "cert.json"
    assert main(["recognize", str(dodeca_files[0]), "--emit-rotation", str(cert), "--stats"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "accept"
    assert re.fullmatch(r"stats n=20 m=90 planar=30 crossing=60 crossbat=0 faces=36 triplets=12 facial=12 "
                        r"seconds=\d+\.\d+", out[1])
    assert main(["verify", str(dodeca_files[0]), str(cert)]) == 0


def test_recognize_rejects_k10(tmp_path, capsys):
    path = tmp_path / "k10.txt"
    write_graph(build_graph(10, [(a, b) for a in range(10) for b in range(a + 1, 10)]), path)
    assert main(["recognize", str(path)]) == 1
    assert capsys.readouterr().out.strip() == "reject preflight edge-count"


def test_recognize_graph6(dodeca_files, tmp_path):
    path = tmp_path / "g.g6"
    write_graph(read_graph(dodeca_files[0]), path, "graph6")
    assert main(["recognize", "--format", "graph6", str(path)]) == 0


@pytest.mark.parametrize("content", ["20\n", "20 90\n0 1\n", "x y\n"])
def test_malformed_input_exits_2(tmp_path, content, capsys):
    path = tmp_path / "bad.txt"
    path.write_text(content)
    assert main(["recognize", str(path)]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_missing_files_exit_2(tmp_path, dodeca_files):
    missing = str(tmp_path / "nope")
    assert main(["recognize", missing]) == 2
    assert main(["verify", missing, str(dodeca_files[1])]) == 2
    assert main(["verify", str(dodeca_files[0]), missing]) == 2
    assert main(["generate", "mutate", missing, "--kind", "edge-swap"]) == 2
    assert main(["render", missing, str(dodeca_files[1]), "--svg", str(tmp_path / "x.svg")]) == 2


def test_usage_errors_exit_2():
    assert main([]) == 2
    assert main(["recognize"]) == 2
    assert main(["generate", "glue"]) == 2


def test_budget_violating_certificate(dodeca_files, tmp_path, capsys):
    import json

    doc = json.loads(dodeca_files[1].read_text())
    e, partners = doc["crossings"][0]
    doc["crossings"][0] = [e, partners + [partners[0]]]
    doc["crossing_sides"][0][1].append(1)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["verify", str(dodeca_files[0]), str(bad)]) == 1
    assert capsys.readouterr().out.startswith("invalid crossing-budget")
    assert main(["render", str(dodeca_files[0]), str(bad), "--svg", str(tmp_path / "x.svg")]) == 1


def test_mutate_then_recognize(dodeca_files, tmp_path, capsys):
    out = tmp_path / "m.txt"
    assert main(["generate", "mutate", str(dodeca_files[0]), "--kind", "degree-breaker", "--seed", "1",
                 "-o", str(out)]) == 0
    assert main(["recognize", str(out)]) == 1
    assert capsys.readouterr().out.strip().startswith("reject preflight min-degree")


def test_saturate_import(tmp_path):
    from pentarec import random_pentangulation
    from pentarec.generate import write_planar_code

    src = tmp_path / "p.pc"
    src.write_bytes(write_planar_code(random_pentangulation(2, 5)))
    out = tmp_path / "g.txt"
    assert main(["generate", "saturate", str(src), "-o", str(out)]) == 0
    assert main(["recognize", str(out)]) == 0


@pytest.mark.parametrize("jobs", ["1", "2"])
def test_batch(dodeca_files, tmp_path, capsys, jobs):
    bad = tmp_path / "bad.txt"
    bad.write_text("x\n")
    mutant = tmp_path / "mutant.txt"
    main(["generate", "mutate", str(dodeca_files[0]), "--kind", "edge-drop", "-o", str(mutant)])
    capsys.readouterr()
    code = main(["recognize", "--batch", "--jobs", jobs, "--emit-dir", str(tmp_path),
                 str(dodeca_files[0]), str(mutant), str(bad)])
    out = capsys.readouterr().out.splitlines()
    assert code == 2
    assert out == [f"{dodeca_files[0]}: accept", f"{mutant}: reject preflight edge-count"]
    assert (tmp_path / "dodeca.json").exists()


def test_console_script(dodeca_files):
    script = shutil.which("pentarec")
    assert script is not None, "console script not installed"
    done = subprocess.run([script, "recognize", str(dodeca_files[0])], capture_output=True, text=True)
    assert (done.returncode, done.stdout) == (0, "accept\n")
    done = subprocess.run([sys.executable, "-m", "pentarec.cli", "verify", str(dodeca_files[0]),
                           str(dodeca_files[1])], capture_output=True, text=True)
    assert (done.returncode, done.stdout) == (0, "valid\n")


def test_render(dodeca_files, tmp_path, capsys):
    svg = tmp_path / "d.svg"
    assert main(["render", str(dodeca_files[0]), str(dodeca_files[1]), "--svg", str(svg)]) == 0
    assert capsys.readouterr().out.strip() == f"wrote {svg} (80 nodes)"
    text = svg.read_text()
    assert text.count('class="vertex"') == 20 and text.count('class="crossing"') == 60
