import json

from girale.cli import run


def invoke(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr().out


def invoke_json(capsys, argv):
    code, out = invoke(capsys, argv + ["--json"])
    return code, json.loads(out)


def test_parse_command(capsys):
    code, doc = invoke_json(capsys, ["parse", "x -o x", "--notation", "girard"])
    assert code == 0
    assert doc["result"]["rendered"]["substructural"] == "x -> x"
    assert doc["meta"]["version"]
    assert doc["meta"]["inputs"]


def test_parse_error_is_usage(capsys):
    code, doc = invoke_json(capsys, ["parse", "x ->"])
    assert code == 2
    assert "error" in doc["result"]


def test_output_determinism(capsys):
    first = invoke(capsys, ["build", "--group", "3", "--sig", "full", "--json"])
    second = invoke(capsys, ["build", "--group", "3", "--sig", "full", "--json"])
    assert first == second


def test_build_writes_algebra(tmp_path, capsys):
    out = tmp_path / "r_z3.json"
    code, doc = invoke_json(
        capsys, ["build", "--group", "3", "--sig", "full", "--out", str(out)]
    )
    assert code == 0
    data = json.loads(out.read_text())
    assert data["size"] == 5
    assert data["names"] == ["1", "a", "a2", "bot", "top"]
    assert doc["result"]["algebra"]["size"] == 5


def test_build_capacity_exit_code(capsys):
    code, doc = invoke_json(capsys, ["build", "--group", "100", "--sig", "none"])
    assert code == 3


def test_check_class_and_member(tmp_path, capsys):
    algebra = tmp_path / "a.json"
    invoke(capsys, ["build", "--group", "3", "--sig", "full", "--out", str(algebra)])
    code, doc = invoke_json(capsys, ["check-class", "--algebra", str(algebra), "--tag", "girale"])
    assert code == 0 and doc["result"]["passed"]
    code, doc = invoke_json(capsys, ["member-k", "--algebra", str(algebra), "--primes", "2"])
    assert code == 0 and doc["result"]["member"]
    code, doc = invoke_json(capsys, ["member-k", "--algebra", str(algebra), "--primes", "3"])
    assert code == 1 and not doc["result"]["member"]
    assert doc["result"]["failed"] == "sigma-3"


def test_consequence_countermodel(tmp_path, capsys):
    algebra = tmp_path / "r_z2.json"
    invoke(capsys, ["build", "--group", "2", "--sig", "none", "--out", str(algebra)])
    code, doc = invoke_json(
        capsys,
        [
            "consequence",
            "--algebras",
            str(algebra),
            "--premises",
            "x*y",
            "--conclusion",
            "x",
        ],
    )
    assert code == 1
    assert doc["result"]["countermodel"] == {"x": "a", "y": "a"}


def test_eval_command(tmp_path, capsys):
    algebra = tmp_path / "g.json"
    invoke(capsys, ["build", "--group", "3", "--sig", "full", "--out", str(algebra)])
    code, doc = invoke_json(
        capsys,
        ["eval", "--algebra", str(algebra), "--formula", "!x", "--assign", "x=a"],
    )
    assert code == 0
    assert doc["result"]["name"] == "bot"


def test_congruences_command(tmp_path, capsys):
    algebra = tmp_path / "g.json"
    invoke(capsys, ["build", "--group", "2", "--sig", "none", "--out", str(algebra)])
    code, doc = invoke_json(capsys, ["congruences", "--algebra", str(algebra)])
    assert code == 0
    assert doc["result"] == {"count": 2, "fsi": True, "simple": True}


def test_homs_command(tmp_path, capsys):
    algebra = tmp_path / "g.json"
    invoke(capsys, ["build", "--group", "2", "--sig", "none", "--out", str(algebra)])
    code, doc = invoke_json(
        capsys, ["homs", "--source", str(algebra), "--target", str(algebra)]
    )
    assert code == 0 and doc["result"]["count"] == 2


def test_prove_command(capsys):
    code, doc = invoke_json(capsys, ["prove", "--sequent", "x, x -> y => y", "--bound", "8"])
    assert code == 0
    assert doc["result"]["status"] == "proved" and doc["result"]["revalidated"]
    code, doc = invoke_json(capsys, ["prove", "--sequent", "x => x * x", "--bound", "12"])
    assert code == 1
    assert doc["result"]["status"] == "refuted"
    assert doc["result"]["countermodel"] == {"x": "a"}


def test_interpolate_command(tmp_path, capsys):
    algebra = tmp_path / "g.json"
    invoke(capsys, ["build", "--group", "3", "--sig", "full", "--out", str(algebra)])
    code, doc = invoke_json(
        capsys,
        [
            "interpolate",
            "--algebras",
            str(algebra),
            "--premise",
            "x /\\ y",
            "--conclusion",
            "x \\/ z",
            "--mode",
            "guarded",
        ],
    )
    assert code == 0
    assert doc["result"]["status"] == "found"
    assert doc["result"]["interpolant"] == "x"


def test_check_proof_command(tmp_path, capsys):
    good = tmp_path / "d.json"
    good.write_text(
        json.dumps(
            [
                {"formula": "1", "rule": "A12"},
                {"formula": "1 -> (x -> x)", "rule": "A13"},
                {"formula": "x -> x", "rule": "mp", "refs": [1, 2]},
            ]
        )
    )
    code, doc = invoke_json(capsys, ["check-proof", "--file", str(good), "--system", "LL"])
    assert code == 0 and doc["result"]["valid"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([{"formula": "x -> y", "rule": "A1"}]))
    code, doc = invoke_json(capsys, ["check-proof", "--file", str(bad), "--system", "LL"])
    assert code == 1
    assert doc["result"]["step"] == 1


def test_amalgamate_command(tmp_path, capsys):
    z3 = tmp_path / "z3.json"
    z5 = tmp_path / "z5.json"
    invoke(capsys, ["build", "--group", "3", "--sig", "none", "--out", str(z3)])
    invoke(capsys, ["build", "--group", "5", "--sig", "none", "--out", str(z5)])
    from girale.algebra import algebra_to_json, trivial_algebra

    trivial = trivial_algebra()
    span = {
        "A": algebra_to_json(trivial),
        "B": json.loads(z3.read_text()),
        "C": json.loads(z5.read_text()),
        "phi1": [0],
        "phi2": [0],
    }
    span_file = tmp_path / "span.json"
    span_file.write_text(json.dumps(span))
    code, doc = invoke_json(
        capsys, ["amalgamate", "--span", str(span_file), "--primes", "2"]
    )
    assert code == 0
    assert doc["result"]["passed"]
    assert doc["result"]["D"]["size"] == 17


def test_catalog_command(capsys):
    code, doc = invoke_json(
        capsys,
        ["catalog", "--primes", "2", "--max-order", "4", "--sig", "none", "--spans"],
    )
    assert code == 0
    assert doc["result"]["failures"] == []
    assert doc["result"]["spans"]["count"] > 0


def test_usage_error_exit_code(capsys):
    assert run(["build", "--sig", "none"]) == 2
    assert run(["nonsense"]) == 2
