import subprocess
import sys

import pytest

from pathsun.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_recognize_named_graph(capsys):
    status, out, _ = run(capsys, "recognize", "g2", "--class", "all")
    assert status == 0
    assert out == "g2  interval=false directed-path=false path=true chordal=true\n"


def test_recognize_file_and_stdin(tmp_path, capsys, monkeypatch):
    f = tmp_path / "graphs.g6"
    f.write_text(">>graph6<<Bw\nD?{  # star\n\n")
    status, out, _ = run(capsys, "recognize", str(f), "--class", "path")
    assert status == 0 and out.splitlines() == ["Bw  path=true", "D?{  path=true"]
    e = tmp_path / "c4.edges"
    e.write_text("n 4\na b\nb c\nc d\nd a\n")
    status, out, _ = run(capsys, "recognize", str(e), "--class", "chordal")
    assert out == "C]o  chordal=false\n" or out.endswith("chordal=false\n")
    monkeypatch.setattr(sys, "stdin", open(f))
    status, out, _ = run(capsys, "recognize", "-", "--class", "interval")
    assert len(out.splitlines()) == 2


def test_empty_input(tmp_path, capsys):
    f = tmp_path / "empty.g6"
    f.write_text("")
    assert run(capsys, "recognize", str(f)) == (0, "", "")


def test_bad_input_exits_2(tmp_path, capsys):
    f = tmp_path / "bad.edges"
    f.write_text("n 2\n0 5\n")
    status, _, err = run(capsys, "recognize", str(f))
    assert status == 2 and "error" in err


def test_engine_disagreement_exits_1(capsys):
    status, out, _ = run(capsys, "recognize", "G}zcQO", "--class", "path", "--engine", "both")
    assert status == 1
    assert "path=DISAGREE(characterization=false,oracle=true)" in out


def test_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("PATHSUN_CAP_CLIQUES", "2")
    status, out, _ = run(capsys, "recognize", "g1", "--class", "path", "--engine", "oracle")
    assert status == 0 and "path=skipped(" in out
    monkeypatch.setenv("PATHSUN_CAP_CLIQUES", "many")
    assert run(capsys, "recognize", "g1", "--engine", "oracle")[0] == 2


def test_certify(capsys):
    status, out, _ = run(capsys, "certify", "f11_8", "--class", "path")
    assert status == 0 and "BadSunSystem, re-verified" in out and "length 3" in out
    _, out, _ = run(capsys, "certify", "c4", "--class", "chordal")
    assert "induced cycle of length 4" in out
    _, out, _ = run(capsys, "certify", "g1", "--class", "path")
    assert "no certificate: member of path" in out
    _, out, _ = run(capsys, "certify", "g3", "--class", "path", "--json")
    assert '"kind": "BadSunSystem"' in out


def test_gen(capsys):
    _, out, _ = run(capsys, "gen", "ksun", "3")
    status, same, _ = run(capsys, "recognize", out.strip(), "--class", "all")
    assert "path=true" in same and "directed-path=false" in same
    _, out, _ = run(capsys, "gen", "f11", "--k", "4", "--format", "edges")
    assert out.startswith("n 16\n")
    _, out, _ = run(capsys, "gen", "sdirected", "--type", "4", "--t", "1")
    assert out.strip().endswith("u=0 v=1")
    _, out, _ = run(capsys, "gen", "corpus", "--n-max", "4")
    assert len(out.splitlines()) == 9
    _, out, _ = run(capsys, "gen", "random", "--samples", "3", "--seed", "7", "--format", "dot")
    assert out.count("graph G {") == 3
    assert run(capsys, "gen", "f11")[0] == 2
    assert run(capsys, "gen", "sdirected", "--type", "9")[0] == 2


def test_output_is_byte_stable(capsys):
    first = run(capsys, "gen", "random", "--samples", "5", "--seed", "3")[1]
    assert first == run(capsys, "gen", "random", "--samples", "5", "--seed", "3")[1]
    a = run(capsys, "certify", "g3", "--class", "path", "--json")[1]
    assert a == run(capsys, "certify", "g3", "--class", "path", "--json")[1]


def test_tree(capsys):
    _, out, _ = run(capsys, "tree", "g1")
    assert out.startswith("graph T {") and out.count("--") == 3
    _, out, _ = run(capsys, "tree", "g3", "--path")
    assert "no clique-path tree" in out
    _, out, _ = run(capsys, "tree", "c4")
    assert "not chordal" in out


def test_validate(capsys):
    status, out, _ = run(capsys, "validate", "prop44", "--k", "4")
    assert status == 0 and out.count("PASS") == 3
    status, out, _ = run(capsys, "validate", "prop44", "--k", "3")
    assert status == 1 and "first violation" in out
    status, out, _ = run(capsys, "validate", "hierarchy", "--n-max", "5")
    assert status == 0


@pytest.mark.parametrize("argv", [["--help"], ["recognize", "--help"]])
def test_help(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 0


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "pathsun", "recognize", "g1", "--class", "all"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert res.returncode == 0
    assert res.stdout == "g1  interval=false directed-path=true path=true chordal=true\n"


def test_parallel_batch_keeps_input_order(tmp_path, capsys):
    _, corpus, _ = run(capsys, "gen", "corpus", "--n-max", "6")
    f = tmp_path / "corpus.g6"
    f.write_text(corpus)
    serial = run(capsys, "recognize", str(f), "--jobs", "1")
    parallel = run(capsys, "recognize", str(f), "--jobs", "2")
    assert serial == parallel and serial[0] == 0
    assert [ln.split()[0] for ln in parallel[1].splitlines()] == corpus.split()
    certs = run(capsys, "certify", str(f), "--class", "path", "--jobs", "2")[1]
    assert certs == run(capsys, "certify", str(f), "--class", "path", "--jobs", "1")[1]
    assert run(capsys, "recognize", str(f), "--jobs", "0")[0] == 2
