import io
import json
import subprocess
import sys


from axilab import cli
from axilab.search import CensusRow


def run(*argv):
    buf = io.StringIO()
    code = cli.run_command(list(argv), buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--json")
    data = json.loads(text)
    assert data["exit_code"] == code
    return code, data


def test_analyze_json():
    code, d = run_json("analyze", "catalog:ex-nonflex-3?l=1/2&d=1/3", "--element", "a")
    assert code == 0
    assert d["axis"] and d["primitive"] and d["jordan_type"] is False
    assert d["left_type"] == ["1/2"] and d["right_type"] == ["1/3"]


def test_analyze_over_finite_field_gives_int_scalars():
    code, d = run_json("analyze", "catalog:ex-nonflex-3?l=2&d=3&p=5", "--element", "a")
    assert code == 0 and d["left_type"] == [2] and d["right_type"] == [3]


def test_decompose_both_methods_agree():
    code, d = run_json("decompose", "catalog:ex-nonflex-5?l=1/2", "--axis", "a", "--element", "a + c + x + y + z", "--method", "both")
    assert code == 0 and d["agree"] is True


def test_two_gen_jordan_pair():
    code, d = run_json("two-gen", "catalog:jordan-sym2", "--a", "e11", "--b", "1/2 + 1/2*s12")
    assert code == 0
    assert d["generated_dim"] == 3 and d["span5_rank"] == 3
    st = {v["claim"]: v["status"] for v in d["verdicts"]}
    assert st["dim3-jordan"] == "PASS"
    assert "FAIL" not in st.values()


def test_two_gen_hypothesis_not_met():
    code, text = run("two-gen", "catalog:ex-nonflex-5", "--a", "a", "--b", "a + c + x + y + z")
    assert code == 3 and "hypothesis not met" in text


def test_verify_on_catalog():
    code, d = run_json("verify-paper", "catalog:diag-2")
    assert code == 0 and d["rows"]
    code, d = run_json("verify-paper", "catalog:ex-nonflex-5?l=1/2")
    rows = {r["claim"]: r for r in d["rows"]}
    assert rows["flexibility-witness"]["status"] == "PASS"
    assert rows["landmark-span5-rank"]["status"] == "PASS"
    # b^2 - b = -c under the table, reported as an example failure
    assert rows["landmark-b-idempotent"]["status"] == "FAIL"
    assert code == 1


def test_enumerate_and_census():
    code, d = run_json("enumerate", "catalog:diag-2?p=5", "--idempotents")
    assert code == 0 and len(d["idempotents"]) == 4
    code, d = run_json("enumerate", "catalog:jordan-sym2?p=7", "--census")
    assert code == 0 and d["census"] and "contradiction" not in d
    code, _ = run("enumerate", "catalog:diag-2", "--idempotents")
    assert code == 2
    code, _ = run("enumerate", "catalog:mat-2?p=7", "--idempotents", "--max", "10")
    assert code == 2


def test_census_contradiction_exits_nonzero(monkeypatch):
    def fake(A, profiles):
        return [CensusRow((A.e(0), A.e(1)), ((2, 2), (2, 2)), 4, (False, False))]

    monkeypatch.setattr(cli, "census_from_profiles", fake)
    code, text = run("enumerate", "catalog:diag-2?p=5", "--census")
    assert code == 1 and "PAPER-CONTRADICTION" in text


def test_miyamoto_and_fusion_and_albert():
    code, d = run_json("miyamoto", "catalog:ex-nonflex-3", "--axes", "a")
    assert code == 0 and d["group_order"] == 4 and not d["truncated"]
    code, d = run_json("fusion", "catalog:ex-nonflex-3", "--axis", "a")
    assert code == 0 and d["z2xz2_grading"] is True
    code, d = run_json("albert", "catalog:jordan-sym2", "--idempotent", "e11")
    assert code == 0 and d["direct_sum"] is True
    code, _ = run("albert", "catalog:ex-nonflex-3", "--idempotent", "a")
    assert code == 3


def test_usage_errors():
    assert run("analyze", "catalog:nope", "--element", "a")[0] == 2
    assert run("analyze", "catalog:diag-2", "--element", "e1 +")[0] == 2
    assert run("bogus")[0] == 2
    assert run("analyze", "catalog:ex-nonflex-5?l=1/2&d=1/3", "--element", "a")[0] == 2
    assert run("decompose", "catalog:diag-2", "--axis", "e1", "--element", "e2", "--types", "1,2,3")[0] == 2


def test_file_source(tmp_path):
    f = tmp_path / "alg.txt"
    f.write_text("field Q\nbasis e\nprod e e = 1 e\n")
    code, d = run_json("analyze", str(f), "--element", "e")
    assert code == 0 and d["axis"]
    bad = tmp_path / "bad.txt"
    bad.write_text("field Q\nbasis e\nprod e f = 1 e\n")
    assert run("analyze", str(bad), "--element", "e")[0] == 2


def test_catalog_command():
    code, d = run_json("catalog", "list")
    assert code == 0 and "jordan-sym2" in d["entries"]
    code, d = run_json("catalog", "show", "ex-nonflex-5")
    assert code == 0 and d["landmarks"]["b"]


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "axilab.cli", "catalog", "list"], capture_output=True, text=True)
    assert out.returncode == 0 and "diag-2" in out.stdout
