import json
import subprocess
import sys

import pytest

from hocat.cli import EXIT, main, run
from hocat.io import dumps, instance_from_dict


@pytest.fixture()
def inst(data):
    return lambda key: str(data / "instances" / f"{key}.json")


@pytest.fixture()
def fun(data):
    return lambda key: str(data / "functors" / f"{key}.json")


def stable(report):
    return {k: v for k, v in report.items() if k != "timing"}


def test_validate_passes(inst):
    code, rep = run(["validate", "--instance", inst("TRIV_DIAMOND")])
    assert code == 0 and rep["verdict"] == "pass"


def test_exit_codes_cover_every_verdict(inst, fun, tmp_path):
    assert EXIT == {"pass": 0, "fail": 1, "invalid": 2, "refused": 3}
    code, rep = run(["derive", "k", "--instance", inst("COLLAPSE_DIAMOND"),
                     "--target-instance", inst("TRIV_DIAMOND"), "--functor", fun("id_DIAMOND")])
    assert code == 1 and rep["counterexamples"] == [{"weak_equivalence": "bot->x"}]
    code, _ = run(["validate", "--instance", str(tmp_path / "missing.json")])
    assert code == 2
    code, rep = run(["build", "localize", "--instance", inst("COLLAPSE_DIAMOND"), "--budget", "5"])
    assert code == 3 and rep["verdict"] == "refused"


def test_partial_table_is_invalid(data, tmp_path):
    d = json.loads((data / "instances" / "ARROW_F.json").read_text())
    d["composition"] = d["composition"][:-1]
    p = tmp_path / "partial.json"
    p.write_text(json.dumps(d))
    code, rep = run(["validate", "--instance", str(p)])
    assert code == 2 and "partial" in rep["results"]["reason"]


def test_corrupted_model_fails_with_a_counterexample(data, tmp_path):
    d = json.loads((data / "instances" / "COLLAPSE_DIAMOND.json").read_text())
    d["classes"]["Fib"] = [m["id"] for m in d["morphisms"]]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(d))
    code, rep = run(["validate", "--instance", str(p), "--format", "json"])
    assert code == 1
    kinds = {ce["kind"] for ce in rep["counterexamples"]}
    assert "lifting" in kinds


def test_built_category_round_trips_through_validate(inst, tmp_path):
    code, rep = run(["build", "localize", "--instance", inst("ARROW_F")])
    assert code == 0 and rep["results"]["category"]["morphisms"] == 4
    table = rep["results"]["category"]["table"]
    p = tmp_path / "loc.json"
    p.write_text(dumps({"name": "loc", **table}))
    assert instance_from_dict(json.loads(p.read_text())).cat.n_mor == 4
    code, rep = run(["validate", "--instance", str(p)])
    assert code == 0


def test_reports_are_deterministic(inst):
    argv = ["classify", "--instance", inst("MIXED_DIAMOND"), "--witness", "kan"]
    a, b = run(argv), run(argv)
    assert a[0] == b[0] == 0
    assert stable(a[1]) == stable(b[1])
    assert a[1]["results"]["flags"]["weak"] == "verified"
    assert a[1]["results"]["flags"]["strong"] == "refuted"


def test_battery_env_is_honoured(inst, data, tmp_path, monkeypatch):
    (tmp_path / "ARROW.json").write_text(
        (data / "battery" / "ARROW.json").read_text())
    argv = ["classify", "--instance", inst("ARROW_F")]
    _, full = run(argv)
    monkeypatch.setenv("HOCAT_BATTERY_DIR", str(tmp_path))
    _, small = run(argv)
    assert full["results"]["battery"] != small["results"]["battery"]
    _, explicit = run(argv + ["--battery", str(tmp_path)])
    assert explicit["results"]["battery"] == small["results"]["battery"]


@pytest.mark.parametrize("argv", [
    ["compare", "ks", "--instance", "TRIV_DIAMOND", "--functor", "id_DIAMOND"],
    ["compare", "kf", "--instance", "TRIV_Z2PLUS", "--functor", "fold_Z2PLUS"],
    ["compare", "ks", "--instance", "TWIST_Z2PLUS", "--functor", "fold_Z2PLUS"],
    ["derive", "s", "--instance", "TRIV_Z2PLUS", "--functor", "const_star_Z2PLUS"],
    ["derive", "f", "--instance", "CHAIN3_MODEL", "--functor", "id_CHAIN3"],
    ["derive", "k", "--instance", "COLLAPSE_DIAMOND", "--target-instance", "TRIV_DIAMOND",
     "--functor", "const_top_DIAMOND", "--route", "both"],
    ["build", "ho", "--instance", "MIXED_DIAMOND", "--route", "both"],
    ["build", "hok", "--instance", "CHAIN3_MODEL"],
])
def test_commands_pass(inst, fun, argv):
    argv = list(argv)
    for flag, f in (("--instance", inst), ("--target-instance", inst), ("--functor", fun)):
        if flag in argv:
            k = argv.index(flag) + 1
            argv[k] = f(argv[k])
    code, rep = run(argv)
    assert code == 0, rep


def test_missing_functor_and_model_are_invalid(inst):
    assert run(["derive", "k", "--instance", inst("TRIV_DIAMOND")])[0] == 2
    assert run(["build", "ho", "--instance", inst("ARROW_F")])[0] == 2


def test_text_and_json_output(inst, capsys):
    assert main(["validate", "--instance", inst("TRIV_Z2PLUS")]) == 0
    assert capsys.readouterr().out.startswith("validate: PASS")
    assert main(["validate", "--instance", inst("TRIV_Z2PLUS"), "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "pass"


def test_module_entry_point(inst):
    out = subprocess.run([sys.executable, "-m", "hocat", "validate", "--instance",
                          inst("CHAIN3_MODEL"), "--format", "json"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["verdict"] == "pass"


def test_identity_law_corruption_fails_validation(data, tmp_path):
    d = json.loads((data / "instances" / "ARROW_F.json").read_text())
    for e in d["composition"]:
        if (e["g"], e["f"]) == ("f", "id_a"):
            e["gf"] = "id_a"
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(d))
    code, rep = run(["validate", "--instance", str(p)])
    assert code == 1 and rep["counterexamples"][0]["kind"] == "identity law"
