import json
import subprocess
import sys

import pytest

from cosetposet.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, rows):
        p = tmp_path / name
        p.write_text("\n".join(rows) + "\n")
        return str(p)

    return {
        "ex1": write("ex1.txt", ["# first example", "11110", "", "00111  # second row"]),
        "m": write("m.txt", ["100011", "010101", "001110"]),
        "n": write("n.txt", ["10000110", "01000101", "00100010", "00010001", "00001111"]),
        "hamming": write("h.txt", ["1000011", "0100101", "0010110", "0001111"]),
        "bad_char": write("bad.txt", ["1100", "1x00"]),
        "ragged": write("ragged.txt", ["1100", "110"]),
        "dependent": write("dep.txt", ["# header", "1100", "0011", "1111"]),
        "empty": write("empty.txt", ["# nothing"]),
    }


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_text(capsys, files):
    code, out, _ = run(capsys, "analyze", files["ex1"])
    assert code == 0
    assert "code: n=5 k=2 d=3" in out
    assert "cosets: 8" in out and "edges: 13" in out
    assert "orphans: C1 C6 C7 (3)" in out
    assert "01010 10100" in out


def test_analyze_records(capsys, files):
    code, out, _ = run(capsys, "analyze", files["hamming"], "--format", "records")
    recs = [json.loads(line) for line in out.splitlines()]
    summary = recs[-1]
    assert code == 0 and summary["star"] and summary["rho"] == 1
    assert all(summary["checks"].values())
    assert sum(r["type"] == "coset" for r in recs) == 8


def test_cosets_and_hasse(capsys, files, tmp_path):
    code, out, _ = run(capsys, "cosets", files["ex1"])
    assert code == 0 and out.count("\n") == 9
    target = tmp_path / "g.dot"
    code, _, _ = run(capsys, "hasse", files["ex1"], "--dot", str(target))
    assert code == 0 and target.read_text().count(" -- ") == 13
    code, out, _ = run(capsys, "hasse", files["ex1"])
    assert out.startswith("graph Hasse {")


def test_distance(capsys, files):
    code, out, _ = run(capsys, "distance", files["ex1"], "00001", "10100")
    assert code == 0
    assert "formula distance: 3" in out and "graph distance: 3" in out
    code, out, _ = run(capsys, "distance", files["ex1"], "00001", "11000")
    assert "same coset" in out


def test_isomorphic_and_equivalent(capsys, files):
    code, out, _ = run(capsys, "isomorphic", files["m"], files["n"])
    assert code == 0 and "isomorphic: true" in out and "mapping:" in out
    code, out, _ = run(capsys, "equivalent", files["m"], files["n"])
    assert code == 0 and out == "equivalent: false\n"
    code, out, _ = run(capsys, "equivalent", files["m"], files["m"])
    assert "equivalent: true" in out


@pytest.mark.parametrize("key, fragment", [
    ("bad_char", "line 2, column 2"),
    ("ragged", "line 2"),
    ("dependent", "line 4"),
    ("empty", "no matrix rows"),
])
def test_input_errors(capsys, files, key, fragment):
    code, out, err = run(capsys, "analyze", files[key])
    assert code == 2 and out == ""
    assert fragment in err


def test_usage_errors(capsys, files, tmp_path):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "analyze", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "distance", files["ex1"], "0001", "10100")[0] == 2
    assert run(capsys, "verify", "--n-max", "9")[0] == 2
    assert run(capsys, "verify", "--n-max", "6", "--budget", "10")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "4", "--format", "records")
    assert code == 0
    assert json.loads(out.splitlines()[-1])["status"] == "pass"


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "cosetposet", "analyze", files["hamming"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "star: true" in proc.stdout
