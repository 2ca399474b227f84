import json
import subprocess
import sys

import pytest

from tprime.cli import parse_inf_partition, run
from tprime.ideals import TruncatedIdeal, ideal_j_plus, ideal_prime_char0, ideal_schur_weyl
from tprime.partitions import InfPartition


def build(tmp_path, name, *spec, extra=()):
    out = tmp_path / name
    assert run(["ideal", "build", *spec, "--N", "4", "--out", str(out), *extra]) == 0
    return out


def test_parse_label():
    assert parse_inf_partition("inf:1,head:1") == InfPartition(1, (1,), 0)
    assert parse_inf_partition("inf:1,head:3/1,tail:1") == InfPartition(1, (3, 1), 1)
    assert parse_inf_partition("inf:inf") == InfPartition(float("inf"))
    assert parse_inf_partition('{"inf_rows": 1, "head": [], "tail": 1}') == InfPartition(1, (), 1)


def test_build_schur_weyl(tmp_path):
    f = build(tmp_path, "p11.json", "schur_weyl", "1", "1")
    assert TruncatedIdeal.from_json(f.read_text()) == ideal_schur_weyl(1, 1, 4)
    g = build(tmp_path, "p11b.json", "schur_weyl:1,1")
    assert f.read_bytes() == g.read_bytes()


def test_build_prime_char0(tmp_path):
    f = build(tmp_path, "i.json", "prime_char0", "inf:1,head:1")
    assert TruncatedIdeal.from_json(f.read_text()) == ideal_prime_char0(InfPartition(1, (1,), 0), 4)


def test_build_deterministic(tmp_path):
    a = build(tmp_path, "a.json", "j_plus", extra=["--field", "fp:3"])
    b = build(tmp_path, "b.json", "j_plus", extra=["--field", "fp:3"])
    assert a.read_bytes() == b.read_bytes()


def test_build_of_phi(tmp_path):
    phi = {"field": "Q", "levels": {str(n): [[n]] for n in range(1, 5)}}
    path = tmp_path / "phi.json"
    path.write_text(json.dumps(phi))
    f = build(tmp_path, "jp.json", "of_phi", str(path))
    assert TruncatedIdeal.from_json(f.read_text()) == ideal_j_plus(4)


def test_ops(tmp_path):
    jp = build(tmp_path, "jp.json", "j_plus")
    jm = build(tmp_path, "jm.json", "j_minus")
    unit = build(tmp_path, "unit.json", "unit")
    out = tmp_path / "out.json"
    assert run(["ideal", "op", "join", str(jm), str(jm), "--out", str(out)]) == 0
    assert TruncatedIdeal.from_json(out.read_text()) == ideal_j_plus(4)
    assert run(["ideal", "op", "dagger", str(jp), str(jm), "--out", str(out)]) == 0
    res = TruncatedIdeal.from_json(out.read_text())
    assert res == ideal_schur_weyl(1, 1, 4)
    assert "dagger" in res.provenance
    assert run(["ideal", "op", "dagger", str(jm), str(unit), "--out", str(out)]) == 0
    assert TruncatedIdeal.from_json(out.read_text()) == TruncatedIdeal.from_json(jm.read_text())


def test_mismatched_op_is_usage_error(tmp_path):
    a = build(tmp_path, "a.json", "j_plus")
    b = build(tmp_path, "b.json", "j_plus", extra=["--field", "fp:3"])
    assert run(["ideal", "op", "join", str(a), str(b)]) == 2


@pytest.mark.parametrize("argv", [
    ["ideal", "build", "nonsense"],
    ["ideal", "build", "schur_weyl", "1"],
    ["ideal", "build", "j_plus", "--field", "fp:4"],
    ["ideal", "build", "j_plus", "--N", "0"],
    ["ideal", "build", "prime_char0", "inf:1", "--field", "fp:3"],
    ["check", "nonsense"],
    ["check", "tprime", "--budget", "0"],
])
def test_usage_errors(argv):
    assert run(argv) == 2


def test_budget_exit_code():
    assert run(["ideal", "build", "j_plus", "--N", "9"]) == 3
    assert run(["check", "verlinde", "--p", "5", "--budget", "800", "--out", "/dev/null"]) == 3


def test_check_verlinde_report(tmp_path):
    out = tmp_path / "r.json"
    assert run(["check", "verlinde", "--p", "3", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    recs = {r["id"]: r for r in report["records"]}
    assert recs["verlinde.p3.abs_det"]["computed"] == 3 and recs["verlinde.p3.abs_det"]["status"] == "PASS"
    for r in report["records"]:
        assert set(r) == {"id", "anchor", "inputs", "computed", "expected", "status"}
    assert [r["id"] for r in report["records"]] == sorted(recs)


def test_check_semiring_passes(tmp_path):
    assert run(["check", "semiring", "--N", "4", "--out", str(tmp_path / "s.json")]) == 0


def test_check_dimension_passes(tmp_path):
    assert run(["check", "dimension", "--ideal", "P_1_1", "--delta", "0", "--out", str(tmp_path / "d.json")]) == 0
    assert run(["check", "dimension", "--ideal", "P_1_1", "--delta", "1", "--out", str(tmp_path / "d.json")]) == 1


def test_check_reports_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        run(["check", "thoma", "--out", str(path)])
    assert a.read_bytes() == b.read_bytes()
    c = tmp_path / "c.json"
    run(["check", "thoma", "--timestamp", "--out", str(c)])
    stamped = json.loads(c.read_text())
    assert "generated_at" in stamped["header"]
    stamped["header"].pop("generated_at")
    assert stamped == json.loads(a.read_text())


@pytest.mark.parametrize("fmt", ["csv", "human"])
def test_other_formats(tmp_path, fmt):
    out = tmp_path / "r.txt"
    assert run(["check", "tprime", "--format", fmt, "--out", str(out)]) == 0
    text = out.read_text()
    assert "tprime.P_1_1" in text


def test_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tprime.cli", "check", "verlinde", "--p", "3", "--format", "human"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "verlinde.p3.abs_det" in proc.stdout
