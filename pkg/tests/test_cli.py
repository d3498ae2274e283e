import csv
import io
import json
from pathlib import Path

import pytest

from orbihrr.arith import parse_cyclotomic, root_of_unity
from orbihrr.cli import run

DATA = Path(__file__).resolve().parent.parent / "data"


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def invoke_json(*argv):
    code, text = invoke(*argv)
    return code, json.loads(text)


def test_wps_chi():
    code, data = invoke_json("wps", "chi", "--weights", "2,3", "--d", "6")
    assert code == 0
    assert data["chi"] == "2"
    assert data["ok"] is True
    assert data["inputs"]["weights"] == ["2", "3"]


def test_wps_chi_of_class():
    code, data = invoke_json("wps", "chi", "--weights", "1,1", "--class", "x^2 - x^-1")
    assert code == 0
    assert data["chi"] == "3"


def test_wps_inertia_rows():
    code, data = invoke_json("wps", "inertia", "--weights", "2,3")
    assert code == 0
    assert [r["sector"] for r in data["rows"]] == ["g=1", "g=-1", "g=z3", "g=z3^2"]
    assert parse_cyclotomic(data["rows"][3]["g"]) == root_of_unity(3, 2)


def test_wps_kring():
    code, data = invoke_json("wps", "kring", "--weights", "2,3")
    assert data["presentation"] == "Z[x]/<(x^2 - 1)(x^3 - 1)>"
    assert data["rank"] == "5"


def test_hrr_verify_csv():
    code, text = invoke("wps", "hrr-verify", "--weights", "2,3", "--dmin", "-3", "--dmax", "8", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [r["d"] for r in rows] == [str(d) for d in range(-3, 9)]
    assert all(r["chi"] == r["oracle"] for r in rows)


def test_hrr_verify_parallel_matches_serial():
    args = ("wps", "hrr-verify", "--weights", "1,2,3", "--dmax", "15", "--format", "csv")
    assert invoke(*args)[1] == invoke(*args, "--jobs", "2")[1]


def test_idft_output_round_trips():
    code, data = invoke_json("idft", "--n", "4", "--coeffs", "0,1,0,0")
    assert code == 0
    values = [parse_cyclotomic(v) for v in data["values"]]
    assert values == [1, root_of_unity(4), -1, root_of_unity(4, 3)]


def test_dft_inverse_flag_matches_idft():
    a = invoke_json("dft", "--n", "3", "--coeffs", "1,z3,2", "--inverse")[1]
    b = invoke_json("idft", "--n", "3", "--coeffs", "1,z3,2")[1]
    assert a["values"] == b["values"]


def test_parseval_command():
    code, data = invoke_json("parseval", "--n", "4", "--f", "1,2,0,0", "--g", "0,1,1,0")
    assert code == 0
    assert data["lhs"] == data["rhs"] == "2"


def test_bg_commands():
    group, std = str(DATA / "s3.json"), str(DATA / "s3_std.json")
    code, data = invoke_json("bg", "euler-char", "--group", group, "--rep", std)
    assert code == 0 and data["rows"][0]["chi"] == "0"
    code, data = invoke_json("bg", "pairing", "--group", group, "--rep", std, "--rep", std)
    assert code == 0 and data["pairing"] == "1"
    code, data = invoke_json("bg", "verify-orthogonality", "--group", group,
                             "--rep", str(DATA / "s3_trivial.json"), "--rep", str(DATA / "s3_sign.json"), "--rep", std)
    assert code == 0


def test_bg_orbch_on_mu4():
    code, data = invoke_json("bg", "orbch", "--group", str(DATA / "mu4.json"), "--rep", str(DATA / "mu4_x1.json"))
    assert code == 0
    row = data["rows"][0]
    assert [row[k] for k in ("()", "(0 1 2 3)", "(0 2)(1 3)", "(0 3 2 1)")] == ["1", "z4", "-1", "-z4"]
    assert set(data["centralizer_orders"].values()) == {"4"}


@pytest.mark.parametrize("model_args", [
    ("--model", "wps", "--weights", "2,3", "--xmax", "2"),
    ("--model", "bmu", "--n", "4", "--trials", "3"),
])
def test_mukai_verify(model_args):
    code, data = invoke_json("mukai", "verify", *model_args)
    assert code == 0
    assert all(r["pass"] for r in data["rows"])


def test_text_and_approx_formats():
    code, text = invoke("wps", "chi", "--weights", "2,3", "--d", "1", "--format", "text", "--approx")
    assert code == 0
    assert "chi" in text


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        run(["nosuch"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["wps", "chi", "--weights", "0,3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["dft", "--n", "3", "--coeffs", "1,2"])
    assert exc.value.code == 2


def test_group_bound_from_environment(monkeypatch, tmp_path, capsys):
    path = tmp_path / "s4.json"
    path.write_text(json.dumps({"degree": 4, "generators": [[1, 0, 2, 3], [1, 2, 3, 0]]}))
    rep = tmp_path / "triv.json"
    rep.write_text(json.dumps({"dimension": 1, "matrices": [[[1]], [[1]]]}))
    monkeypatch.setenv("ORBIHRR_MAX_GROUP_ORDER", "10")
    code, _ = invoke("bg", "euler-char", "--group", str(path), "--rep", str(rep))
    assert code == 2
    assert "error" in capsys.readouterr().err
    monkeypatch.setenv("ORBIHRR_MAX_GROUP_ORDER", "24")
    code, _ = invoke("bg", "euler-char", "--group", str(path), "--rep", str(rep))
    assert code == 0


def test_inconsistent_representation_exits_2(tmp_path):
    rep = tmp_path / "bad.json"
    rep.write_text(json.dumps({"dimension": 1, "matrices": [[[2]], [[1]]]}))
    code, _ = invoke("bg", "euler-char", "--group", str(DATA / "s3.json"), "--rep", str(rep))
    assert code == 2


def test_selftest_passes():
    code, data = invoke_json("selftest")
    assert code == 0
    assert data["ok"] is True
