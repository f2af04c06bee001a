from pathlib import Path

import pytest

from sympmatroid.cli import run

DATA = Path(__file__).parent / "data"
PAPER = str(DATA / "paper_example.txt")
TWO = str(DATA / "two_bases.txt")


def test_check_bases_paper_example(capsys):
    assert run(["check-bases", PAPER]) == 0
    out = capsys.readouterr().out
    assert "symplectic matroid: yes" in out
    assert "rank: 2" in out
    assert "lagrangian: no" in out


def test_check_bases_lagrangian_flag(tmp_path, capsys):
    f = tmp_path / "lag.txt"
    f.write_text("1 2 3\n")
    assert run(["check-bases", str(f)]) == 0
    assert "lagrangian: yes" in capsys.readouterr().out


def test_check_bases_sampled(capsys):
    assert run(["check-bases", TWO, "--samples", "50", "--seed", "9"]) == 0
    assert "sampled weights agree: yes" in capsys.readouterr().out


def test_check_bases_invalid_input(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("1 -1\n")
    assert run(["check-bases", str(f)]) == 2
    err = capsys.readouterr().err
    assert "inadmissible" in err


def test_check_bases_failing_family(tmp_path, capsys):
    # {1 2; -1 3} over E±3 fails the definition (frozen from the
    # (3, 2) sweep); its witness is (2 -1 3, k=3)
    f = tmp_path / "fam.txt"
    f.write_text("1 2\n-1 3\n")
    assert run(["check-bases", str(f)]) == 1
    assert "symplectic matroid: no" in capsys.readouterr().out


def test_check_independent(tmp_path, capsys):
    closure = tmp_path / "ind.txt"
    assert run(["independent-sets", PAPER]) == 0
    closure.write_text(capsys.readouterr().out)
    assert run(["check-independent", str(closure)]) == 0
    assert "axiom holds: yes" in capsys.readouterr().out


def test_check_independent_failure(tmp_path, capsys):
    f = tmp_path / "ind.txt"
    f.write_text("{}\n1\n2\n-1\n1 2\n")
    assert run(["check-independent", str(f)]) == 1
    out = capsys.readouterr().out
    assert "axiom holds: no" in out
    assert "failure kind: no_augmenting_x" in out


def test_check_independent_not_closed(tmp_path, capsys):
    f = tmp_path / "ind.txt"
    f.write_text("1 2\n")
    assert run(["check-independent", str(f)]) == 2


def test_bases_round_trip(tmp_path, capsys):
    # bases(independent-sets(F)) reproduces F byte for byte for
    # canonical-format F
    closure = tmp_path / "closure.txt"
    canonical = tmp_path / "canonical.txt"
    assert run(["independent-sets", PAPER]) == 0
    closure.write_text(capsys.readouterr().out)
    assert run(["bases", str(closure)]) == 0
    canonical.write_text(capsys.readouterr().out)

    assert run(["independent-sets", str(canonical)]) == 0
    closure.write_text(capsys.readouterr().out)
    assert run(["bases", str(closure)]) == 0
    assert capsys.readouterr().out == canonical.read_text()


def test_greedy_trace(capsys):
    assert run(["greedy", TWO, "--ordering", "3 2 1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1] == "1 -2 3"
    assert "2 SKIP {2,3} extends no member" in lines


def test_greedy_bad_ordering(capsys):
    assert run(["greedy", TWO, "--ordering", "1 1 2"]) == 2


def test_witness_matroid(capsys):
    assert run(["witness", PAPER]) == 1
    assert "no counterexample" in capsys.readouterr().err


def test_witness_found(tmp_path, capsys):
    f = tmp_path / "fam.txt"
    f.write_text("1\n1 2\n")
    # not even a valid basis family (sizes differ)
    assert run(["witness", str(f)]) == 2

    f.write_text("1 2\n-1 3\n")
    assert run(["witness", str(f)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("ordering: ")
    assert "threshold: " in out
    assert "greedy: " in out
    assert "beaten-by: " in out
    assert run(["witness", str(f), "--wxyz"]) == 0
    capsys.readouterr()
    assert run(["witness", str(f), "--ordering", "2 -1 3"]) == 0
    assert "threshold: " in capsys.readouterr().out


def test_enumerate(capsys):
    assert run(["enumerate", "2", "2"]) == 0
    out = capsys.readouterr().out
    assert "total families: 15" in out
    assert "mismatches: 0" in out


def test_enumerate_budget(capsys):
    assert run(["enumerate", "4", "2"]) == 2


def test_enumerate_catalog(tmp_path, capsys):
    dest = tmp_path / "catalog.txt"
    assert run(["enumerate", "1", "1", "--catalog", str(dest)]) == 0
    assert "catalog written: 3" in capsys.readouterr().out
    assert dest.read_text().count("---") == 2


def test_n_override(tmp_path, capsys):
    f = tmp_path / "fam.txt"
    f.write_text("1\n")
    assert run(["check-bases", str(f), "--n", "2"]) == 0
    assert run(["check-bases", str(f), "--n", "0"]) == 2


def test_unknown_subcommand():
    assert run(["frobnicate"]) == 2
