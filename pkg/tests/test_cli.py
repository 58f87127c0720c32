import json
import subprocess
import sys

import pytest

from companion_bases.cli import main
from companion_bases.companion import loads_companion_basis, is_companion_basis
from companion_bases.quiver import loads_exchange_matrix

from conftest import PENDANT_ARROWS, PENDANT_DVECTORS

PENDANT_JSON = json.dumps({"n": 4, "arrows": [list(a) for a in PENDANT_ARROWS]})

PENDANT_BASIS_JSON = json.dumps(
    {
        "type": "A4",
        "quiver": {"n": 4, "arrows": [list(a) for a in PENDANT_ARROWS]},
        "gamma": [[-1, 0, 0, 0], [0, -1, -1, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    }
)


@pytest.fixture
def pendant_file(tmp_path):
    path = tmp_path / "pendant.json"
    path.write_text(PENDANT_JSON)
    return path


def run(args):
    return main([str(a) for a in args])


def test_mutate_involution(tmp_path):
    src = tmp_path / "path.json"
    src.write_text('{"n": 3, "arrows": [[0, 1], [1, 2]]}')
    once = tmp_path / "once.json"
    twice = tmp_path / "twice.json"
    assert run(["mutate", "--input", src, "--k", 1, "--output", once]) == 0
    assert loads_exchange_matrix(once.read_text()).entries == (
        (0, -1, 1),
        (1, 0, -1),
        (-1, 1, 0),
    )
    assert run(["mutate", "--input", once, "--k", 1, "--output", twice]) == 0
    canonical = tmp_path / "canonical.json"
    assert run(["mutate", "--input", src, "--sequence", "1,1,1,1,1,1", "--output", canonical]) == 0
    assert twice.read_bytes() == canonical.read_bytes()


def test_mutate_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert run(["mutate", "--input", bad, "--k", 0]) == 2
    good = tmp_path / "good.json"
    good.write_text('{"n": 2, "arrows": [[0, 1]]}')
    assert run(["mutate", "--input", good, "--k", 5]) == 3
    assert run(["mutate", "--input", good]) == 2
    assert run(["mutate", "--input", good, "--sequence", "0,x"]) == 2


def test_recognize(tmp_path, capsys, pendant_file):
    assert run(["recognize", "--input", pendant_file]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report == {"dynkin_type": "A4", "finite_type": True}

    square = tmp_path / "square.json"
    square.write_text('{"n": 4, "arrows": [[0, 1], [1, 2], [3, 2], [0, 3]]}')
    assert run(["recognize", "--input", square]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["finite_type"] is False
    assert report["failing_condition"] == "chordless cycle not cyclically oriented"

    one = tmp_path / "one.json"
    one.write_text('{"n": 1, "b": [[0]]}')
    assert run(["recognize", "--input", one]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "dynkin_type": "A1",
        "finite_type": True,
    }

    double = tmp_path / "double.json"
    double.write_text('{"n": 2, "b": [[0, 2], [-2, 0]]}')
    assert run(["recognize", "--input", double]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report == {
        "failing_condition": "no positive quasi-Cartan companion",
        "finite_type": False,
    }


def test_companion_command(tmp_path, capsys, pendant_file):
    out = tmp_path / "basis.json"
    assert run(["companion", "--input", pendant_file, "--output", out]) == 0
    psi, B = loads_companion_basis(out.read_text())
    assert is_companion_basis(psi, B)

    path = tmp_path / "path.json"
    path.write_text('{"n": 3, "arrows": [[0, 1], [1, 2]]}')
    assert run(["companion", "--input", path, "--output", out]) == 0
    psi, _ = loads_companion_basis(out.read_text())
    assert psi.gamma == psi.rs.simple_roots

    d5 = tmp_path / "d5.json"
    d5.write_text('{"n": 5, "arrows": [[0, 1], [1, 2], [2, 3], [2, 4]]}')
    assert run(["companion", "--input", d5, "--output", out]) == 0
    psi, B = loads_companion_basis(out.read_text())
    assert str(psi.rs.dynkin) == "D5"
    assert is_companion_basis(psi, B)

    square = tmp_path / "square.json"
    square.write_text('{"n": 4, "arrows": [[0, 1], [1, 2], [3, 2], [0, 3]]}')
    assert run(["companion", "--input", square]) == 4


def test_dvectors_command(tmp_path, capsys):
    basis = tmp_path / "basis.json"
    basis.write_text(PENDANT_BASIS_JSON)
    assert run(["dvectors", "--input", basis]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["type"] == "A4"
    assert report["count"] == 10
    assert {tuple(row["d"]) for row in report["vectors"]} == PENDANT_DVECTORS
    ds = [row["d"] for row in report["vectors"]]
    assert ds == sorted(ds)

    a2 = tmp_path / "a2.json"
    a2.write_text(
        json.dumps(
            {
                "type": "A2",
                "quiver": {"n": 2, "arrows": [[0, 1]]},
                "gamma": [[1, 0], [0, 1]],
            }
        )
    )
    assert run(["dvectors", "--input", a2]) == 0
    report = json.loads(capsys.readouterr().out)
    assert {tuple(r["d"]) for r in report["vectors"]} == {(1, 0), (0, 1), (1, 1)}

    invalid = tmp_path / "invalid.json"
    invalid.write_text(
        json.dumps(
            {
                "type": "A2",
                "quiver": {"n": 2, "arrows": []},
                "gamma": [[1, 0], [0, 1]],
            }
        )
    )
    assert run(["dvectors", "--input", invalid]) == 4
    capsys.readouterr()

    bad = tmp_path / "bad.json"
    bad.write_text("!")
    assert run(["dvectors", "--input", bad]) == 2


def test_verify_type_a(tmp_path):
    out = tmp_path / "report.jsonl"
    assert run(["verify-type-a", "--n", 2, "--mode", "exhaustive", "--output", out]) == 0
    lines = [json.loads(line) for line in out.read_text().splitlines()]
    summary = lines[-1]
    assert summary["total"] == 5 and summary["strong"] == 5
    records = lines[:-1]
    assert all(set(r) == {"diagonals", "quiver", "strong", "n_strings"} for r in records)
    assert all(r["n_strings"] == 3 for r in records)

    sampled = tmp_path / "sampled.jsonl"
    assert (
        run(
            [
                "verify-type-a",
                "--n", 5,
                "--mode", "sample",
                "--seed", 1,
                "--walk-length", 10,
                "--output", sampled,
            ]
        )
        == 0
    )
    lines = [json.loads(line) for line in sampled.read_text().splitlines()]
    assert lines[-1]["total"] == 10 and lines[-1]["strong"] == 10
    assert lines[-1]["seed"] == 1

    # byte-stable across runs
    again = tmp_path / "again.jsonl"
    assert (
        run(
            [
                "verify-type-a",
                "--n", 5,
                "--mode", "sample",
                "--seed", 1,
                "--walk-length", 10,
                "--output", again,
            ]
        )
        == 0
    )
    assert again.read_bytes() == sampled.read_bytes()

    assert run(["verify-type-a", "--mode", "exhaustive"]) == 2
    assert run(["verify-type-a", "--n", 9, "--mode", "exhaustive"]) == 2


def test_verify_type_a_parallel(tmp_path):
    serial = tmp_path / "serial.jsonl"
    parallel = tmp_path / "parallel.jsonl"
    assert run(["verify-type-a", "--n", 3, "--output", serial]) == 0
    assert run(["verify-type-a", "--n", 3, "--jobs", 2, "--output", parallel]) == 0
    assert serial.read_bytes() == parallel.read_bytes()


def test_type_flag_generates_standard_orientation(tmp_path, capsys):
    assert run(["recognize", "--type", "E7"]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "dynkin_type": "E7",
        "finite_type": True,
    }
    out = tmp_path / "d5.json"
    assert run(["companion", "--type", "D5", "--output", out]) == 0
    psi, B = loads_companion_basis(out.read_text())
    assert str(psi.rs.dynkin) == "D5"
    assert psi.gamma == psi.rs.simple_roots
    assert run(["recognize", "--type", "F4"]) == 2


def test_console_entry_point(tmp_path):
    src = tmp_path / "m.json"
    src.write_text('{"n": 2, "arrows": [[0, 1]]}')
    proc = subprocess.run(
        [sys.executable, "-m", "companion_bases.cli", "recognize", "--input", str(src)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"dynkin_type": "A2", "finite_type": True}
