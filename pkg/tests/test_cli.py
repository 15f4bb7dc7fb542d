import json
import subprocess
import sys

import pytest

from artifact.cli import dump_category, load_category, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def semion_file(tmp_path, capsys):
    path = tmp_path / "semion.json"
    code, _, _ = run(capsys, "lattice", "--gram", "2", "--emit", str(path))
    assert code == 0
    return path


def test_lattice_semion(capsys):
    code, out, _ = run(capsys, "lattice", "--gram", "2")
    assert code == 0
    assert "Z/2" in out and "overall: PASS" in out


def test_lattice_a2(capsys):
    code, out, _ = run(capsys, "lattice", "--gram", "2 -1; -1 2")
    assert code == 0 and "Z/3" in out


def test_lattice_gram_file(tmp_path, capsys):
    p = tmp_path / "g.txt"
    p.write_text("4 2\n2 4\n")
    code, out, _ = run(capsys, "lattice", "--gram-file", str(p))
    assert code == 0 and "order 12" in out


@pytest.mark.parametrize("gram", ["1", "2 1; 1 2 3", "0", "x"])
def test_lattice_bad_gram(capsys, gram):
    code, _, err = run(capsys, "lattice", "--gram", gram)
    assert code == 2 and err.startswith("error:")


def test_round_trip(semion_file, tmp_path, capsys):
    code, out, _ = run(capsys, "verify", str(semion_file))
    assert code == 0 and "overall: PASS" in out
    assert dump_category(load_category(semion_file)) == semion_file.read_text()
    again = tmp_path / "again.json"
    run(capsys, "lattice", "--gram", "2", "--emit", str(again))
    assert again.read_bytes() == semion_file.read_bytes()


@pytest.mark.parametrize("gram", ["4", "2 -1; -1 2", "4 2; 2 4", "2 0; 0 6"])
def test_round_trip_lattices(tmp_path, capsys, gram):
    path = tmp_path / "c.json"
    assert run(capsys, "lattice", "--gram", gram, "--emit", str(path))[0] == 0
    assert run(capsys, "verify", str(path))[0] == 0
    assert dump_category(load_category(path)) == path.read_text()


def test_conjugated_r_exit_1(semion_file, capsys):
    obj = json.loads(semion_file.read_text())
    for ent in obj["R"]:
        if ent["tuple"] == ["1", "1", "0"]:
            assert ent["value"] == ["0", "1"]
            ent["value"] = ["0", "-1"]
    semion_file.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "verify", str(semion_file))
    assert code == 1
    assert "at (1, 1, 0)" in out


def test_negated_f_exit_1(semion_file, capsys):
    obj = json.loads(semion_file.read_text())
    obj["F"][0]["value"] = ["-1"]
    semion_file.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "verify", "--format", "json", str(semion_file))
    assert code == 1
    rep = json.loads(out)
    assert rep["status"] == "fail"
    failing = [c for r in rep["reports"] for c in r["checks"] if c["status"] == "fail"]
    assert failing and all(c["failures"][0]["where"] for c in failing)


def _mutate(path, fn):
    obj = json.loads(path.read_text())
    fn(obj)
    path.write_text(json.dumps(obj))


@pytest.mark.parametrize(
    "mutation",
    [
        lambda o: o["fusion"].append(["0", "1", "7"]),
        lambda o: o.update(version=2),
        lambda o: o.update(schema="other"),
        lambda o: o.pop("twist"),
        lambda o: o["R"][0].update(value=["1", "0", "0"]),
        lambda o: o["R"][0].update(value="1"),
        lambda o: o["R"].append(dict(o["R"][0])),
        lambda o: o["F"].pop(),
        lambda o: o.update(unit="z"),
    ],
)
def test_schema_errors_exit_2(semion_file, capsys, mutation):
    _mutate(semion_file, mutation)
    code, _, err = run(capsys, "verify", str(semion_file))
    assert code == 2 and err.startswith("error:")


def test_unreadable_files_exit_2(tmp_path, capsys):
    assert run(capsys, "verify", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify", str(bad))[0] == 2


def test_json_output(capsys):
    code, out, _ = run(capsys, "lattice", "--gram", "4", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass"
    assert rep["lattice"]["invariant_factors"] == [4]


def test_minimal_model(capsys):
    code, out, _ = run(capsys, "minimal-model", "--m", "3")
    assert code == 0 and "c = 1/2" in out and "1/16" in out
    code, out, _ = run(capsys, "minimal-model", "--m", "4", "--format", "json")
    assert code == 0
    w = {(e["r"], e["s"]): e["h"] for e in json.loads(out)["minimal_model"]["weights"]}
    assert w[(2, 2)] == "3/80"
    assert run(capsys, "minimal-model", "--m", "1")[0] == 2


def test_catext(capsys):
    code, out, _ = run(capsys, "catext", "--gram", "4", "--max-len", "6", "--trials", "1000", "--seed", "7")
    assert code == 0 and "overall: PASS" in out


def test_catext_bad_args(capsys):
    assert run(capsys, "catext", "--gram", "4", "--trials", "-1")[0] == 2
    assert run(capsys, "catext", "--gram", "3")[0] == 2


def test_dhr(capsys):
    code, out, _ = run(capsys, "dhr", "--gram", "2")
    assert code == 0 and "G(B) = epsilon" in out
    assert run(capsys, "dhr", "--gram", "2", "--choices", "0")[0] == 2


def test_determinism(capsys):
    a = run(capsys, "catext", "--gram", "2 -1; -1 2", "--trials", "200", "--seed", "3", "--format", "json")
    b = run(capsys, "catext", "--gram", "2 -1; -1 2", "--trials", "200", "--seed", "3", "--format", "json")
    assert a == b
    a = run(capsys, "dhr", "--gram", "4", "--seed", "5")
    b = run(capsys, "dhr", "--gram", "4", "--seed", "5")
    assert a == b


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_console_script(semion_file):
    proc = subprocess.run([sys.executable, "-m", "artifact.cli", "verify", str(semion_file)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "overall: PASS" in proc.stdout
