import io
import json
import subprocess
import sys

from signedshift.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_decide_allowed():
    code, text = run("decide", "356124", "+-")
    assert code == 0
    assert "allowed" in text
    assert "|245|*61|" in text and "|245*6|1|" in text


def test_decide_forbidden():
    code, text = run("decide", "615423", "--")
    assert code == 1
    assert "forbidden" in text and "invalid" in text


def test_decide_sign_only_tokens():
    for signs in ["--", "-+", "---", "+-"]:
        code, _ = run("decide", "2314", signs)
        assert code in (0, 1)


def test_decide_parse_errors(capsys):
    assert run("decide", "1", "+")[0] == 2
    assert run("decide", "1224", "+-")[0] == 2
    assert run("decide", "123", "+x")[0] == 2
    assert run("bogus")[0] == 2


def test_decide_json_and_verify():
    code, text = run("--format", "json", "decide", "356124", "+-")
    record = json.loads(text)
    assert record["allowed"] and len(record["segmentations"]) == 2
    assert {"indices", "bars", "prefix", "p", "q", "valid"} <= set(record["segmentations"][0])
    code2, text2 = run("--format", "json", "--verify", "decide", "356124", "+-")
    verified = json.loads(text2)
    assert verified.pop("verify")["agrees"]
    assert verified == record


def test_witness():
    code, text = run("witness", "356124", "+-")
    assert code == 0 and text.strip().endswith("(0)")
    assert run("witness", "615423", "--")[0] == 1


def test_intervals():
    code, text = run("intervals", "231", "+-")
    assert code == 0
    assert text.strip() == "[11(0), (1)) U ((01), 01(0)]"
    code, text = run("--format", "json", "intervals", "312", "+-")
    assert json.loads(text)[0]["lower"] == "(10)"
    assert run("intervals", "615423", "--")[0] == 1


def test_table_matches_published_cells():
    code, text = run("--format", "csv", "table", "b", "9", "8")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[-1] == "9,1842,36674,139760,142892,39514,2194,4"
    code, text = run("--format", "csv", "table", "b_pos", "9", "8")
    assert "8,738,8790,19476,10212,1098,6," in text


def test_table_verify_keeps_values():
    plain = run("table", "intervals", "5", "3")[1]
    code, verified = run("--verify", "table", "intervals", "5", "3")
    assert code == 0
    assert verified.startswith(plain)
    assert verified[len(plain):].startswith("verify")
    assert run("table", "b", "7", "4", "--verify")[0] == 0


def test_forbidden():
    code, text = run("forbidden", "negative", "4")
    assert code == 0
    assert sorted(text.split()[-4:]) == ["123456", "123465", "654312", "654321"]
    assert run("forbidden", "positive", "1")[0] == 2


def test_tent_and_entropy():
    code, text = run("--format", "json", "tent", "6")
    rows = json.loads(text)
    assert [r["allowed"] for r in rows] == [1, 2, 5, 12, 31, 75]
    assert rows[4]["lower"] == "28" and rows[4]["upper"] == "34"
    code, text = run("entropy", "+-", "10")
    assert code == 0 and "log(k)" in text


def test_oracle():
    code, text = run("oracle", "+-", "5")
    assert code == 0 and text.startswith("31 patterns")
    code, text = run("--format", "json", "--verify", "oracle", "--", "4")
    record = json.loads(text)
    assert record["count"] == 20 and record["verify"]["agrees"]
    code, text = run("oracle", "+-", "4", "map-sampling", "--denominator", "50", "--verify")
    assert code == 0


def test_budget_refusal(capsys):
    code, _ = run("--budget", "1000", "tent", "9")
    assert code == 2
    assert "budget" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "signedshift", "decide", "52413", "++"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "|34|*12|" in proc.stdout
