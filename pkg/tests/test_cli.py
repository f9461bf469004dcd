"""Command-line interface: payloads, exit codes, determinism."""

import json

from folcurves.cli import main

WEDGE_ARGS = ["wedge", "z0*dz1 - z1*dz0", "z0*dz1 - z1*dz0 + z2*dz3 - z3*dz2"]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_table_row(capsys):
    code, out, _ = run(capsys, ["classify", "3", "13", "--reduced", "--json"])
    assert code == 0
    body = json.loads(out)
    assert body["status"] == "ok"
    payload = body["payload"]
    assert payload["curve"] == {"degree": 5, "genus": -4}
    assert payload["verdict"]["charge"] == 4
    assert payload["dim_moduli"] == 14
    assert payload["h0_OC"] == 5


def test_classify_split_human(capsys):
    code, out, _ = run(capsys, ["classify", "2", "6"])
    assert code == 0
    assert "split conormal" in out
    assert "degree 5, genus 1" in out


def test_classify_impossible_exit_code(capsys):
    code, _, err = run(capsys, ["classify", "3", "16"])
    assert code == 2
    assert "error:" in err


def test_classify_flags_emitted(capsys):
    code, out, _ = run(capsys, ["classify", "3", "8", "--json"])
    assert code == 0
    body = json.loads(out)
    assert body["flags"] and body["flags"][0]["stated"] == 5


def test_wedge_with_invariants_and_rao(capsys):
    code, out, _ = run(capsys, WEDGE_ARGS + ["--invariants", "--rao", "--json"])
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["invariants"] == {"degree": 2, "genus": -1}
    assert payload["rao"] == {"profile": {"0": 1}, "total": 1}


def test_wedge_rejects_non_projective(capsys):
    code, _, err = run(capsys, ["wedge", "z0*dz0", "z1*dz0", "--legendrian"])
    assert code == 2
    assert "error:" in err


def test_json_outputs_are_deterministic(capsys):
    argv = WEDGE_ARGS + ["--invariants", "--json"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second
    _, third, _ = run(capsys, ["classify", "3", "12", "--reduced", "--json"])
    _, fourth, _ = run(capsys, ["classify", "3", "12", "--reduced", "--json"])
    assert third == fourth


def test_hilbert_and_rao_from_file(capsys, tmp_path):
    path = tmp_path / "skew.ideal"
    path.write_text("# two skew lines\nz0*z2\nz0*z3\nz1*z2\nz1*z3\n")
    code, out, _ = run(capsys, ["hilbert", str(path), "--json"])
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["hilbert_polynomial"] == "2*t + 2"
    assert payload["curve"] == {"degree": 2, "genus": -1}
    code, out, _ = run(capsys, ["rao", str(path), "--json"])
    assert code == 0
    assert json.loads(out)["payload"] == {"profile": {"0": 1}, "total": 1}


def test_syzygy_command(capsys):
    code, out, _ = run(capsys, ["syzygy", "z0^2,z1^2,z2,z3", "2,2,1,1", "3", "--json"])
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["dimension"] == 8


def test_chi_command(capsys):
    code, out, _ = run(capsys, ["chi", "2", "0", "1", "0", "1", "--json"])
    assert code == 0
    assert json.loads(out)["payload"] == {"chi": 5}


def test_cohomology_command(capsys):
    # a leading negative twist needs the usual "--" separator
    code, out, _ = run(capsys, ["cohomology", "instanton:1", "--json", "--", "-2..1"])
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["twists"]["-1"] == [0, 1, 0, 0]
    assert payload["twists"]["1"] == [5, 0, 0, 0]
    code, out, _ = run(capsys, ["cohomology", "line", "--json", "--", "-4..0"])
    payload = json.loads(out)["payload"]
    assert payload["twists"]["-4"] == [0, 0, 0, 1]


def test_monad_command(capsys, tmp_path):
    path = tmp_path / "monad.json"
    path.write_text(json.dumps({"template": {"c": [1], "b": [0, 0]}}))
    code, out, _ = run(capsys, ["monad", str(path), "--regularity", "--json"])
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["chern"] == {"rank": 2, "c1": 0, "c2": 1, "c3": 0}
    assert payload["regularity"] == 1
    raw = tmp_path / "raw.json"
    raw.write_text(json.dumps({"left": [-2], "middle": [-1, -1, 0, 0], "right": [1]}))
    code, out, _ = run(capsys, ["monad", str(raw), "--json"])
    assert json.loads(out)["payload"]["chern"]["c2"] == 2
    code, _, _ = run(capsys, ["monad", str(raw), "--regularity"])
    assert code == 2


def test_moduli_command(capsys):
    code, out, _ = run(capsys, ["moduli", "legendrian", "2", "--json"])
    assert code == 0
    assert json.loads(out)["payload"]["dimension"] == 20
    code, out, _ = run(capsys, ["moduli", "nc", "1", "--json"])
    body = json.loads(out)
    assert body["payload"]["stated"] == 34
    assert body["payload"]["derived"] == 33
    assert body["flags"]


def test_invariants_command(capsys):
    code, out, _ = run(capsys, ["invariants", "3", "10", "--json"])
    assert code == 0
    assert json.loads(out)["payload"]["curve"] == {"degree": 8, "genus": 5}
    code, _, _ = run(capsys, ["invariants", "2", "5"])
    assert code == 2


def test_verify_single_suites(capsys):
    code, out, _ = run(capsys, ["verify", "--suite", "table1"])
    assert code == 0
    assert "table1" in out and "PASS" in out
    code, out, _ = run(capsys, ["verify", "--suite", "moduli", "--json"])
    assert code == 0
    body = json.loads(out)
    assert body["status"] == "ok"
    assert body["flags"]


def test_verify_syzygy_suite(capsys):
    code, out, _ = run(capsys, ["verify", "--suite", "syzygy"])
    assert code == 0
    assert "PASS" in out
