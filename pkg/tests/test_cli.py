import pathlib
import subprocess
import sys

import pytest

from ltlteach.cli import main
from ltlteach.sample import read_sample

GOLDEN = pathlib.Path(__file__).parent / "golden" / "worked.sample"
WORKED = ["--ap", "p,q,r", "--formula", "F(p & q & F(r & F(p & q)))"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_golden_sample(capsys):
    code, out, _ = run(capsys, "characterize", *WORKED, "--fragment", "monotone")
    assert code == 0
    assert out == GOLDEN.read_text()


def test_golden_positives():
    sample = read_sample(GOLDEN.read_text())
    from ltlteach.words import format_word
    assert [format_word(w) for w in sample.positives] == [
        "{p,q,r}", "{}.{p,q,r}", "{p,q}.{p,q,r}", "{}.{p,q}.{p,q,r}", "{p,q}.{r}.{p,q}", "{}.{p,q}.{r}.{p,q}",
    ]


def test_out_file_is_repeatable(tmp_path, capsys):
    a, b = tmp_path / "a.sample", tmp_path / "b.sample"
    assert run(capsys, "characterize", *WORKED, "--out", str(a))[0] == 0
    assert run(capsys, "characterize", *WORKED, "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes() == GOLDEN.read_bytes()


def test_round_trip(capsys):
    code, out, _ = run(capsys, "fits", "--sample", str(GOLDEN), "--formula", WORKED[3])
    assert (code, out.strip()) == (0, "fits")
    code, out, _ = run(capsys, "fits", "--sample", str(GOLDEN), "--formula", "F(p & q)")
    assert code == 1 and out.startswith("does not fit")
    code, out, _ = run(capsys, "verify-unique", "--sample", str(GOLDEN), "--formula", WORKED[3],
                       "--ops", "F,sF,&,|,true,false", "--max-size", "4")
    assert code == 0 and out.startswith("confirmed")


def test_eval(capsys):
    assert run(capsys, "eval", "--ap", "p", "--formula", "F p", "--word", "{}.{p}")[:2] == (0, "true\n")
    assert run(capsys, "eval", "--ap", "p", "--formula", "X p", "--word", "{p}")[:2] == (1, "false\n")
    assert run(capsys, "eval", "--ap", "p", "--formula", "F p", "--expr", "{}^w")[:2] == (1, "false\n")
    assert run(capsys, "eval", "--ap", "p", "--formula", "F p", "--schema", "[true]*.[p]")[:2] == (0, "true\n")


def test_classify(capsys):
    assert run(capsys, "classify", "--ops", "F,&")[:2] == (1, "does not admit; violated fragment {F,∧}\n")
    code, out, _ = run(capsys, "classify", "--ops", "sF,X,&,true")
    assert code == 0 and out.startswith("admits")


def test_usage_errors(capsys):
    assert run(capsys, "characterize", "--formula", "F p")[0] == 2
    code, _, err = run(capsys, "characterize", "--ap", "p", "--formula", "F q")
    assert code == 2 and "q" in err
    assert run(capsys, "characterize", "--ap", "p", "--formula", "F (p")[0] == 2
    assert run(capsys, "fits", "--sample", "/nonexistent", "--formula", "p")[0] == 2
    assert run(capsys, "characterize", "--ap", "p", "--formula", "X p")[0] == 2
    with pytest.raises(SystemExit):
        main(["frobnicate"])


def test_budget(capsys):
    code, _, err = run(capsys, "characterize", *WORKED, "--budget", "3")
    assert code == 3 and "doubly exponential" in err


def test_undecided_schema(capsys):
    code, out, _ = run(capsys, "eval", "--ap", "p,q", "--formula", "p U q", "--schema", "[p]*.[q]")
    assert code == 3 and out == "unknown\n"


def test_teach_learn(tmp_path, capsys):
    path = tmp_path / "t.sample"
    argv = ["--ap", "p,q", "--ops", "sF,&", "--max-size", "4"]
    assert run(capsys, "teach", *argv, "--formula", "sF(p & q)", "--out", str(path))[0] == 0
    code, out, _ = run(capsys, "learn", "--sample", str(path), "--ops", "sF,&", "--max-size", "4")
    assert (code, out) == (0, "sF (p & q)\n")


def test_adversary(tmp_path, capsys):
    path = tmp_path / "x.sample"
    path.write_text("ap: p\n+ word {p}\n- word {}\n")
    code, out, _ = run(capsys, "adversary", "--family", "X-or", "--sample", str(path))
    assert code == 0 and "parameter 2" in out


def test_oracle_and_size_report(capsys):
    assert run(capsys, "oracle", "--ap", "p", "--formula", "sF p", "--max-len", "3")[0] == 0
    code, out, _ = run(capsys, "size-report", "--ap", "p,q", "--formula", "F(p & F q)")
    assert code == 0 and out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ltlteach", "classify", "--ops", "U"],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and "does not admit" in proc.stdout
