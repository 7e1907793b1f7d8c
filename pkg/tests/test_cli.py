import io
import json
import subprocess
import sys

from tamecovers.cli import run


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    old_out, old_err = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = run(argv)
    finally:
        sys.stdout, sys.stderr = old_out, old_err
    return code, out.getvalue(), err.getvalue()


def invoke_json(argv):
    code, out, err = invoke(argv)
    assert code == 0, (code, out, err)
    return json.loads(out)


def test_hurwitz_char0_golden():
    code, out, _ = invoke(["hurwitz-char0", "--d", "5", "--cycles", "3,2,3,4"])
    assert code == 0
    assert out == '{"count": 8}\n'


def test_hurwitz_p_golden():
    code, out, _ = invoke(["hurwitz-p", "--p", "5", "--cycles", "3,2,3", "--with-pminus1"])
    assert code == 0
    assert json.loads(out) == {"h_p": 3, "degree_check": 3, "supersingular": ["4"]}


def test_hurwitz_p_accepts_four_cycles():
    doc = invoke_json(["hurwitz-p", "--p", "5", "--cycles", "3,2,3,4"])
    assert doc["h_p"] == 3


def test_three_point_golden_over_Q():
    doc = invoke_json(["three-point", "--p", "0", "--cycles", "3,2,2"])
    assert doc == {
        "char": 0,
        "num": ["0", "0", "0", "1"],
        "den": ["-2", "3"],
        "type": [3, 3, 2, 2],
    }


def test_three_point_over_prime_field():
    doc = invoke_json(["three-point", "--p", "7", "--cycles", "3,2,2"])
    assert doc["char"] == 7
    assert doc["num"] == ["0", "0", "0", "5"]
    assert doc["den"] == ["4", "1"]


def test_lambda_map_output():
    doc = invoke_json(["lambda-map", "--p", "5", "--cycles", "2,2,2"])
    assert doc["degree"] == 4
    assert doc["tilde"] == [3, 2, 2, 3]
    assert doc["lambda_num"] == ["0", "0", "0", "1", "2"]
    assert doc["lambda_den"] == ["2", "1"]
    assert doc["supersingular"] == []


def test_lift_and_contract_round_trip(tmp_path):
    doc = invoke_json(["lift", "--p", "7", "--cycles", "3,2,5", "--mu", "4"])
    assert doc["lambda"] == "2"
    assert doc["cover"]["type"] == [7, 3, 2, 5, 6]
    cover_path = tmp_path / "cover.json"
    cover_path.write_text(json.dumps(doc["cover"]), encoding="utf-8")
    back = invoke_json(
        ["contract", "--p", "7", "--cover", str(cover_path), "--lambda", "2", "--mu", "4"]
    )
    assert back["num"] == ["0", "0", "0", "5"]
    assert back["den"] == ["4", "1"]
    assert back["type"] == [3, 3, 2, 2]


def test_fiber_count_supersingular():
    doc = invoke_json(["fiber-count", "--p", "5", "--cycles", "3,2,3", "--lambda", "4"])
    assert doc == {
        "lambda0": "4",
        "count": 2,
        "degree": 3,
        "supersingular": True,
        "critical": False,
    }


def test_fiber_count_extension_lambda():
    doc = invoke_json(
        ["fiber-count", "--p", "5", "--cycles", "3,2,3", "--lambda", "1*t+0"]
    )
    assert doc["count"] == 3
    assert doc["supersingular"] is False


def test_bad_degree_output():
    doc = invoke_json(["bad-degree", "--p", "5", "--cycles", "2,3,3"])
    assert doc["bad"] == 5 and doc["case"] == "mixed" and doc["quotient"] == 1


def test_additive_family_and_twist():
    doc = invoke_json(["additive-family", "--p", "5", "--cycles", "2,4"])
    assert doc["h_p_4pt"] == 1
    assert doc["families"][0]["a"] == "3"
    assert doc["families"][0]["rho"] == "4"
    assert doc["families"][0]["c"] == "2"
    tw = invoke_json(["additive-twist", "--p", "5", "--cycles", "2,4", "--c", "2"])
    assert tw["results"][0]["lambda"] == "3"
    assert tw["results"][0]["cover"]["type"] == [7, 7, 4, 3, 2]


def test_sweep_is_sorted_and_reports_errors_inline():
    doc = invoke_json(["hurwitz-p", "--sweep", "p=5..13", "--cycles", "2,2,2"])
    ps = [entry["p"] for entry in doc["sweep"]]
    assert ps == [5, 7, 11, 13]
    assert doc["sweep"][0]["h_p"] == 4
    assert doc["sweep"][1]["h_p"] == 0


def test_output_is_deterministic():
    _, out1, _ = invoke(["lambda-map", "--p", "7", "--cycles", "2,2,4"])
    _, out2, _ = invoke(["lambda-map", "--p", "7", "--cycles", "2,2,4"])
    assert out1 == out2


def test_out_flag_writes_file(tmp_path):
    path = tmp_path / "result.json"
    code, out, _ = invoke(
        ["three-point", "--p", "0", "--cycles", "3,2,2", "--out", str(path)]
    )
    assert code == 0
    assert json.loads(path.read_text(encoding="utf-8")) == json.loads(out)


def test_domain_error_exit_code_and_shape():
    code, out, _ = invoke(["three-point", "--p", "3", "--cycles", "2,2,3"])
    assert code == 2
    doc = json.loads(out)
    assert doc["error"] == "NoSuchCover"
    assert "detail" in doc


def test_usage_error_exit_code():
    code, _out, err = invoke(["hurwitz-char0", "--d", "5"])
    assert code == 1 and "usage" in err.lower()
    code, _out, err = invoke(["no-such-command"])
    assert code == 1


def test_verify_paper_examples_suite():
    doc = invoke_json(["verify", "--suite", "paper-examples", "--p", "5"])
    assert doc["all_pass"] is True
    names = [c["name"] for c in doc["checks"]]
    assert "example-b-cover-Q" in names


def test_verify_roundtrip_suite_small():
    doc = invoke_json(["verify", "--suite", "roundtrip", "--p", "5"])
    assert doc["all_pass"] is True


def test_pretty_flag():
    code, out, _ = invoke(["hurwitz-char0", "--d", "3", "--cycles", "2,2,3", "--pretty"])
    assert code == 0 and out.startswith("{\n")


def test_module_invocation_smoke():
    result = subprocess.run(
        [sys.executable, "-m", "tamecovers", "hurwitz-char0", "--d", "3", "--cycles", "2,2,3"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout) == {"count": 1}
