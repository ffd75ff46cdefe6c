"""Command line interface: JSON I/O, exit codes, workspace, verify report."""

import io
import json
import subprocess
import sys

import pytest

from torica.cli import main

PHI_CONE = {"dim": 3, "generators": [[1, 0, 0], [0, 1, 0], [1, 0, 2], [0, 1, 2]]}
SURFACE_IDEAL = {
    "field": 101,
    "variables": ["C", "Y", "Z", "A", "B", "X"],
    "generators": [
        "A^2 - B*C", "A*X - B*Z", "A*Y - B*X",
        "A*Z - C*X", "A*X - C*Y", "X^2 - Y*Z",
        "C", "Y", "B-Z",
    ],
}


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def out_json(argv, capsys, expect_code=0):
    code, out, _err = run_cli(argv, capsys)
    assert code == expect_code, f"exit {code}, output: {out!r}"
    return json.loads(out)


def write_json(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


def test_cone_dual(tmp_path, capsys):
    cone_file = write_json(tmp_path / "cone.json", PHI_CONE)
    data = out_json(["cone", "dual", cone_file], capsys)
    assert data["generators"] == [[0, 0, 1], [0, 1, 0], [1, 0, 0], [2, 2, -1]]
    assert data["type"] == "cone"


def test_cone_dual_from_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(PHI_CONE)))
    data = out_json(["cone", "dual", "-"], capsys)
    assert data["generators"] == [[0, 0, 1], [0, 1, 0], [1, 0, 0], [2, 2, -1]]


def test_cone_rays_builtin(capsys):
    data = out_json(["cone", "rays", "@A1"], capsys)
    assert data["rays"] == [
        {"index": 0, "generator": [1, 0]},
        {"index": 1, "generator": [1, 2]},
    ]


def test_cone_hilbert_basis(tmp_path, capsys):
    cone_file = write_json(tmp_path / "cone.json", PHI_CONE)
    data = out_json(["cone", "hilbert-basis", cone_file], capsys)
    assert len(data["hilbert_basis"]) == 6


def test_cone_product(tmp_path, capsys):
    a = write_json(tmp_path / "a.json", {"dim": 1, "generators": [[1]]})
    b = write_json(tmp_path / "b.json", {"dim": 2, "generators": [[1, 0], [0, 1]]})
    data = out_json(["cone", "product", a, b], capsys)
    assert data["dim"] == 3
    assert len(data["generators"]) == 3


def test_cone_rays_rejects_lines(tmp_path, capsys):
    bad = write_json(tmp_path / "bad.json", {"dim": 2, "generators": [[1, 0], [-1, 0]]})
    code, out, _ = run_cli(["cone", "rays", bad], capsys)
    assert code == 1
    assert json.loads(out)["error"]["code"] == "NOT_STRONGLY_CONVEX"


def test_ideal_toric_builtin_map(capsys):
    data = out_json(["ideal", "toric", "@phi"], capsys)
    assert data["field"] == 101
    assert set(data["generators"]) == {
        "C*Y - B*Z", "X^2 - Y*Z", "C*X - A*Z",
        "B*X - A*Y", "A*X - B*Z", "A^2 - B*C",
    }
    assert len(data["semigroup"]["hilbert_basis"]) == 6


def test_ideal_toric_from_matrix_file(tmp_path, capsys):
    doc = {"phi": [[3, 2, 1, 0], [0, 1, 2, 3]], "variables": ["z0", "z1", "z2", "z3"]}
    map_file = write_json(tmp_path / "phi.json", doc)
    data = out_json(["ideal", "toric", map_file, "--field", "7"], capsys)
    assert data["field"] == 7
    assert len(data["generators"]) == 3


def test_ideal_groebner_and_saturate(tmp_path, capsys):
    doc = {"field": 101, "variables": ["x", "y"], "generators": ["x^2*y - x^2"]}
    ideal_file = write_json(tmp_path / "ideal.json", doc)
    data = out_json(["ideal", "groebner", ideal_file], capsys)
    assert data["generators"] == ["x^2*y - x^2"]
    data = out_json(["ideal", "saturate", ideal_file, "--at", "x*y"], capsys)
    assert data["generators"] == ["y - 1"]


def test_ideal_quotient_dim(tmp_path, capsys):
    ideal_file = write_json(tmp_path / "cut.json", SURFACE_IDEAL)
    data = out_json(["ideal", "quotient-dim", ideal_file], capsys)
    assert data["dimension"] == 4
    assert sorted(data["standard_monomials"]) == ["1", "A", "B", "X"]


def test_ideal_short_key_aliases(tmp_path, capsys):
    doc = {"char": 7, "vars": ["x", "y"], "gens": ["x^2 - y^2"]}
    ideal_file = write_json(tmp_path / "short.json", doc)
    data = out_json(["ideal", "groebner", ideal_file], capsys)
    assert data["field"] == 7
    assert data["generators"] == ["x^2 - y^2"]


def test_ideal_quotient_dim_infinite(tmp_path, capsys):
    doc = {"field": 101, "variables": ["x", "y"], "generators": ["x^2"]}
    ideal_file = write_json(tmp_path / "inf.json", doc)
    data = out_json(["ideal", "quotient-dim", ideal_file], capsys)
    assert data["dimension"] == "INFINITE"
    assert data["standard_monomials"] is None


def test_ideal_regular_seq(tmp_path, capsys):
    doc = {
        "field": 101,
        "variables": ["A", "B", "C", "X", "Y", "Z"],
        "generators": [
            "A^2 - B*C", "A*X - B*Z", "A*Y - B*X",
            "A*Z - C*X", "A*X - C*Y", "X^2 - Y*Z",
        ],
    }
    ideal_file = write_json(tmp_path / "surface.json", doc)
    data = out_json(
        ["ideal", "regular-seq", ideal_file, "--elements", "C", "Y", "B-Z"], capsys
    )
    assert data == {"regular": True, "elements": ["C", "Y", "B - Z"], "degree_bound": 12}


def test_ideal_regular_seq_inconclusive_exits_one(tmp_path, capsys):
    doc = {"field": 101, "variables": ["x", "y"], "generators": []}
    ideal_file = write_json(tmp_path / "zero.json", doc)
    code, out, _ = run_cli(
        [
            "ideal", "regular-seq", ideal_file,
            "--elements", "x^4 + y^4",
            "--degree-bound", "3",
        ],
        capsys,
    )
    assert code == 1
    error = json.loads(out)["error"]
    assert error["code"] == "INCONCLUSIVE" and error["bound"] == 3


def test_div_class_group_builtins(capsys):
    assert out_json(["div", "class-group", "@S"], capsys) == {"free": 1, "torsion": []}
    assert out_json(["div", "class-group", "@A1"], capsys) == {"free": 0, "torsion": [2]}
    assert out_json(["div", "class-group", "@S^2*A^1"], capsys) == {
        "free": 2,
        "torsion": [],
    }


def test_div_canonical(capsys):
    data = out_json(["div", "canonical", "@S"], capsys)
    assert data["class"] == {"free": [2], "torsion": []}
    assert data["divisor"] == {"coeffs": [-1, -1, -1, -1]}


def test_div_half_canonical_success_and_failure(capsys):
    data = out_json(["div", "half-canonical", "@S"], capsys)
    assert data == {"free": [1], "torsion": []}
    code, out, _ = run_cli(["div", "half-canonical", "@A1"], capsys)
    assert code == 1
    error = json.loads(out)["error"]
    assert error["code"] == "NON_UNIQUE" and error["count"] == 2


def test_div_module_gens(tmp_path, capsys):
    divisor_file = write_json(tmp_path / "d.json", {"coeffs": [-1, 0, -1, 0]})
    data = out_json(["div", "module-gens", "@S", divisor_file], capsys)
    assert data["generators"] == [[1, 0, 1], [1, 0, 2]]
    by_ray = write_json(
        tmp_path / "d2.json",
        {"ray_coeffs": [[[1, 0, 0], -1], [[0, 0, 1], -1]]},
    )
    data2 = out_json(["div", "module-gens", "@S", by_ray], capsys)
    assert data2 == data


def test_div_multiplicity(capsys):
    for k, s, expected in ((0, 0, 1), (1, 0, 2), (1, 2, 2), (2, 0, 4), (3, 1, 8)):
        data = out_json(
            ["div", "multiplicity", "--k", str(k), "--s", str(s)], capsys
        )
        assert data["multiplicity"] == expected


def test_div_trace_witness(tmp_path, capsys):
    divisor_file = write_json(tmp_path / "d.json", {"coeffs": [-1, 0, -1, 0]})
    target_file = write_json(tmp_path / "t.json", {"coeffs": [0, 0, -1, 0]})
    data = out_json(
        ["div", "trace-witness", "@S", divisor_file, "--target", target_file], capsys
    )
    assert data == {"surjective": True, "witness": [1, 0, 2]}


def test_div_mcm_scan(capsys):
    data = out_json(["div", "mcm-scan", "@S"], capsys)
    assert data["candidates"] == [
        {"class": -1, "generators": 4},
        {"class": 0, "generators": 1},
        {"class": 1, "generators": 2},
        {"class": 2, "generators": 3},
        {"class": 3, "generators": 4},
    ]


def test_verify_report(tmp_path, capsys):
    report_file = tmp_path / "report.json"
    data = out_json(["verify", "--report", str(report_file), "--json"], capsys)
    assert data["report_version"] == 1
    assert data["all_pass"] is True
    assert data["total"] >= 15
    assert all(c["pass"] for c in data["checks"])
    on_disk = json.loads(report_file.read_text())
    assert on_disk == data


def test_verify_field_independence(capsys):
    default_run = out_json(["verify"], capsys)
    small_field = out_json(["verify", "--field", "3"], capsys)
    assert small_field["field"] == 3
    passes = lambda report: [c["check_id"] for c in report["checks"] if c["pass"]]
    assert passes(small_field) == passes(default_run)


def test_verify_refuses_field_two(capsys):
    code, _out, err = run_cli(["verify", "--field", "2"], capsys)
    assert code == 2
    assert "odd prime" in json.loads(err)["error"]["message"]


def test_paper_verify_alias(capsys):
    data = out_json(["paper", "verify", "--json"], capsys)
    assert data["all_pass"] is True


def test_verify_console_script_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "torica.cli", "verify", "--field", "2"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 2


def test_field_env_variable(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("TORICA_FIELD", "7")
    data = out_json(["ideal", "toric", "@phi"], capsys)
    assert data["field"] == 7
    # explicit flag wins over the environment
    data = out_json(["ideal", "toric", "@phi", "--field", "5"], capsys)
    assert data["field"] == 5


def test_workspace_round_trip(tmp_path, capsys):
    ws = str(tmp_path / "ws.json")
    cone_file = write_json(tmp_path / "cone.json", PHI_CONE)
    out_json(["workspace", "set", "phi_cone", cone_file, "--workspace", ws], capsys)
    data = out_json(["workspace", "get", "phi_cone", "--workspace", ws], capsys)
    assert data == PHI_CONE
    listing = out_json(["workspace", "list", "--workspace", ws], capsys)
    assert listing["objects"] == ["phi_cone"]
    # stored object usable as @name input
    dual = out_json(["cone", "dual", "@phi_cone", "--workspace", ws], capsys)
    assert dual["generators"] == [[0, 0, 1], [0, 1, 0], [1, 0, 0], [2, 2, -1]]
    # save -> load -> save is byte-identical
    first = (tmp_path / "ws.json").read_bytes()
    out_json(["workspace", "set", "phi_cone", cone_file, "--workspace", ws], capsys)
    assert (tmp_path / "ws.json").read_bytes() == first
    out_json(["workspace", "delete", "phi_cone", "--workspace", ws], capsys)
    listing = out_json(["workspace", "list", "--workspace", ws], capsys)
    assert listing["objects"] == []


def test_json_flag_is_compact(capsys):
    code, out, _ = run_cli(["div", "class-group", "@S", "--json"], capsys)
    assert code == 0
    assert out.strip() == '{"free":1,"torsion":[]}'
    assert "\n" not in out.strip()


def test_usage_errors_exit_two(tmp_path, capsys):
    code, _out, err = run_cli(["cone", "dual", str(tmp_path / "missing.json")], capsys)
    assert code == 2
    assert json.loads(err)["error"]["code"] == "USAGE"
    bad = tmp_path / "bad.json"
    bad.write_text("not json at all")
    code, _out, err = run_cli(["cone", "dual", str(bad)], capsys)
    assert code == 2
    code, _out, err = run_cli(["cone", "dual", "@nosuch"], capsys)
    assert code == 2
    doc = write_json(tmp_path / "noshape.json", {"something": 1})
    code, _out, err = run_cli(["cone", "dual", doc], capsys)
    assert code == 2
