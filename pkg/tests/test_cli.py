import json
import subprocess
import sys

import pytest

from polyloop.cli import main

SQUARE = {"m": 4, "facets": [[1, 2], [2, 3], [3, 4], [1, 4]]}
TRIANGLE = {"m": 3, "facets": [[1, 2], [1, 3], [2, 3]]}


@pytest.fixture
def cfile(tmp_path):
    def write(data, name="k.json"):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data))
        return str(path)
    return write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_betti_tsv(cfile, capsys):
    code, out, _ = run(["betti", "--complex", cfile(TRIANGLE), "--bound", "3"], capsys)
    assert code == 0
    assert "1,1,1\t1\t1\t" in out.splitlines()


def test_betti_json(cfile, capsys):
    code, out, _ = run(["betti", "--complex", cfile(TRIANGLE), "--format", "json"], capsys)
    assert code == 0
    rows = json.loads(out)
    assert {"I": [1, 1, 1], "k": 0, "rank": 1, "torsion": []} in rows


def test_ext(cfile, capsys):
    code, out, _ = run(["ext", "--complex", cfile(SQUARE), "--bound", "3", "--char", "2"], capsys)
    assert code == 0
    assert out.startswith("n\tI\tdim_tor")


def test_verify_passes_and_corrupt_fails(cfile, capsys):
    path = cfile([TRIANGLE, SQUARE])
    code, out, _ = run(["verify", "--complex", path, "--bound", "2"], capsys)
    assert code == 0
    assert "complex1\tflag_collapse\t1" in out
    code, out, _ = run(["verify", "--complex", path, "--bound", "3", "--corrupt-boundary"], capsys)
    assert code == 1
    assert "d_squared\t0" in out


def test_verify_empty_list(cfile, capsys):
    code, out, _ = run(["verify", "--complex", cfile([])], capsys)
    assert code == 0


def test_loop_with_oracle(cfile, capsys):
    code, out, _ = run(["loop", "--complex", cfile(TRIANGLE), "--cutoff", "5", "--oracle", "--format", "json"], capsys)
    assert code == 0
    rows = json.loads(out)
    assert [r["dim"] for r in rows] == [1, 3, 6, 10, 16, 27]
    assert all(r["match"] for r in rows)


def test_loop_oracle_needs_poly(cfile, capsys):
    code, _, err = run(["loop", "--complex", cfile(TRIANGLE), "--inputs", "exterior(1)", "--oracle"], capsys)
    assert code == 2 and "poly" in err


def test_series(cfile, capsys):
    code, out, _ = run(["series", "--complex", cfile(SQUARE), "--cutoff", "4", "--format", "json"], capsys)
    assert code == 0
    assert [r["series"] for r in json.loads(out)] == [1, 4, 12, 32, 80]
    code, out, _ = run(["series", "--fatwedge", "1", "--cutoff", "6"], capsys)
    assert code == 0 and out.count("\n") == 3
    code, _, err = run(["series", "--complex", cfile(TRIANGLE)], capsys)
    assert code == 2 and "flag" in err


def test_artin(cfile, capsys):
    code, out, _ = run(["artin", "--complex", cfile(SQUARE), "--multidegree", "1,1,1,1"], capsys)
    assert code == 0 and out.splitlines()[1] == "1,1,1,1\t4"
    code, _, _ = run(["artin", "--complex", cfile(SQUARE), "--multidegree", "1,1"], capsys)
    assert code == 2


def test_noequal(capsys):
    assert run(["noequal", "--m", "4", "--s", "3"], capsys)[0] == 0
    assert run(["noequal", "--m", "4", "--s", "3", "--interpretation", "vacuous"], capsys)[0] == 1
    assert run(["noequal", "--m", "4", "--s", "2"], capsys)[0] == 2


def test_arrangement(cfile, capsys):
    code, out, _ = run(["arrangement", "--complex", cfile(SQUARE)], capsys)
    assert code == 0
    assert json.loads(out)["subspaces"] == [[1, 3], [2, 4]]


def test_malformed_json_and_bad_complex(cfile, capsys):
    assert run(["betti", "--complex", cfile("{not json")], capsys)[0] == 2
    assert run(["betti", "--complex", cfile({"m": 2, "facets": [[1]]})], capsys)[0] == 2
    assert run(["betti", "--complex", cfile({"facets": []})], capsys)[0] == 2


def test_missing_file(tmp_path, capsys):
    assert run(["betti", "--complex", str(tmp_path / "nope.json")], capsys)[0] == 3


def test_output_file(cfile, tmp_path, capsys):
    dest = tmp_path / "out.tsv"
    assert run(["artin", "--complex", cfile(SQUARE), "-o", str(dest)], capsys)[0] == 0
    assert dest.read_text().startswith("I\tcount")


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["betti"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["loop", "--complex", "x", "--char", "4"])
    assert exc.value.code == 2


def test_deterministic_default_verify(capsys):
    a = run(["verify", "--bound", "2", "--seed", "5"], capsys)
    b = run(["verify", "--bound", "2", "--seed", "5"], capsys)
    assert a == b and a[0] == 0


def test_module_entry_point(cfile):
    res = subprocess.run([sys.executable, "-m", "polyloop", "artin", "--complex", cfile(TRIANGLE),
                          "--multidegree", "1,1,1"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[1] == "1,1,1\t1"
