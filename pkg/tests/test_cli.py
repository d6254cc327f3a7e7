import csv
import os

from psl2t.cli import main, sniff
from psl2t.plmaps import PLMap
from psl2t.ppmaps import PPMap
from psl2t.trees import TreePairDiagram
from psl2t.words import NormalWord, PSL2Matrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sniff():
    assert isinstance(sniff("bab"), NormalWord)
    assert isinstance(sniff("[[0,-1],[1,0]]"), PSL2Matrix)
    assert isinstance(sniff("100:2:100"), TreePairDiagram)
    assert isinstance(sniff("0,3/4; 1/2,1; 3/4,3/2; 1,7/4"), PLMap)
    assert isinstance(sniff("0/1..0/1:[[1,0],[0,1]]"), PPMap)


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "abba")
    assert code == 0
    assert out.splitlines()[0] == "aBa"


def test_to_diagram_and_back(capsys):
    code, out, _ = run(capsys, "to-diagram", "bab")
    assert code == 0 and out.strip() == "1011000:4:1010100"
    code, out, _ = run(capsys, "to-word", "1011000:4:1010100")
    assert code == 0 and out.strip() == "bab"


def test_to_word_non_member(capsys):
    code, _, err = run(capsys, "to-word", "1010100:1:1011000")
    assert code == 1
    assert "not a member" in err


def test_member(capsys):
    code, out, _ = run(capsys, "member", "1011000:4:1010100")
    assert code == 0 and out.strip() == "member"
    code, out, _ = run(capsys, "member", "1010100:1:1011000")
    assert code == 0 and out.strip() == "non-member"


def test_compose_words(capsys):
    code, out, _ = run(capsys, "compose", "ab", "ba")
    assert code == 0 and out.strip() == "aBa"
    code, out, _ = run(capsys, "compose", "ab", "Ba")
    assert code == 0 and out.strip() == "e"


def test_minkowski(capsys):
    code, out, _ = run(capsys, "minkowski", "-2/3")
    assert code == 0 and out.strip() == "13/16"
    code, out, _ = run(capsys, "minkowski-inv", "13/16")
    assert code == 0 and out.strip() == "-2/3"


def test_conjugate(capsys):
    code, out, _ = run(capsys, "conjugate", "b")
    assert code == 0 and out.strip() == "0,3/4; 1/2,1; 3/4,3/2; 1,7/4"


def test_seq(capsys):
    code, out, _ = run(capsys, "seq", "b")
    assert code == 0
    assert out.splitlines()[0] == "1/2,o2/1,1/1"


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "member", "10:1:10")
    assert code == 2
    assert "error:" in err


def test_lengths_report(tmp_path, capsys):
    csv_path = tmp_path / "len.csv"
    png_path = tmp_path / "len.png"
    code, _, _ = run(capsys, "lengths", "--max-k", "3",
                     "-o", str(csv_path), "--plot", str(png_path))
    assert code == 0
    with open(csv_path) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 2 + 8 + 16 + 32
    assert any(r["word"] == "bab" and r["len_ab"] == "3" for r in rows)
    assert os.path.getsize(png_path) > 0


def test_bfs_report(tmp_path, capsys):
    csv_path = tmp_path / "bfs.csv"
    code, _, _ = run(capsys, "bfs", "--radius", "2", "-o", str(csv_path))
    assert code == 0
    with open(csv_path) as fh:
        rows = list(csv.DictReader(fh))
    dists = sorted(int(r["dist_abc"]) for r in rows)
    assert dists[0] == 0 and dists[-1] == 2


def test_render(tmp_path, capsys):
    out_path = tmp_path / "bab.dot"
    code, _, _ = run(capsys, "render", "bab", "-o", str(out_path))
    assert code == 0
    assert "digraph source" in out_path.read_text()


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-k", "2", "--radius", "2")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert len(lines) == 10
    assert all(l.startswith("PASS") for l in lines)
