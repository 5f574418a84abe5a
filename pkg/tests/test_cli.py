import json

from zsindex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_index_command(capsys):
    code, out, _ = run(capsys, "index", "--n", "25", "--seq", "1,21,22,6")
    assert code == 0
    assert "index=1" in out and "witness=21" in out


def test_index_command_json_round_trip(capsys):
    code, out, _ = run(capsys, "index", "--n", "7", "--seq", "1,1,2,3", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["command"] == "index"
    assert report["records"][0]["index"] == 1
    assert report["records"][0]["witness"] == 1
    assert json.loads(json.dumps(report)) == report


def test_index_rejects_non_zero_sum(capsys):
    code, _, err = run(capsys, "index", "--n", "25", "--seq", "1,2,3,4")
    assert code == 2
    assert "not zero-sum" in err


def test_index_rejects_bad_elements(capsys):
    code, _, err = run(capsys, "index", "--n", "25", "--seq", "0,1,2,3")
    assert code == 2


def test_verify_single_modulus(capsys):
    code, out, _ = run(capsys, "verify", "--n", "25", "--json")
    assert code == 0
    report = json.loads(out)
    assert len(report["records"]) == 1
    rec = report["records"][0]
    assert rec["n"] == 25 and rec["max_index"] == 1
    assert rec["schema"] == report["schema"]


def test_verify_range_and_csv(capsys):
    code, out, _ = run(capsys, "verify", "--range", "5", "30", "--jobs", "1", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("n,total_minimal")
    assert len(lines) == 1 + len([n for n in range(5, 31) if n % 2 and n % 3])


def test_verify_rejects_inverted_range(capsys):
    code, _, err = run(capsys, "verify", "--range", "100", "5")
    assert code == 2


def test_usage_error_exit_code(capsys):
    assert main(["verify", "--range", "5"]) == 2
    assert main(["nonsense"]) == 2


def test_singular_command(capsys):
    code, out, _ = run(capsys, "singular", "--n", "25")
    assert code == 0
    assert "ok" in out


def test_goodk_command(capsys):
    code, out, _ = run(capsys, "goodk", "--n", "25", "--json")
    assert code == 0
    report = json.loads(out)
    assert [r["k"] for r in report["records"] if r["good"]] == [1, 2, 4]
    assert report["params"]["b"] == 3
    assert report["params"]["final_bound"] == 22


def test_witness_command(capsys):
    code, out, _ = run(capsys, "witness", "--n", "25", "--form", "6")
    assert code == 0
    assert "g=3" in out and "count=3" in out


def test_enumerate_command(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["records"] == [[1, 1, 1, 2], [1, 3, 3, 3], [2, 2, 2, 4], [3, 4, 4, 4]]


def test_primes_check_command(capsys):
    code, out, _ = run(capsys, "primes-check", "--max", "1000")
    assert code == 0
    assert "hold" in out


def test_reports_have_no_floats(capsys):
    for argv in (
        ["verify", "--n", "25", "--json"],
        ["goodk", "--n", "25", "--json"],
        ["witness", "--n", "25", "--form", "4", "--json"],
    ):
        code, out, _ = run(capsys, *argv)
        assert code == 0

        def no_floats(obj):
            if isinstance(obj, float):
                return False
            if isinstance(obj, dict):
                return all(no_floats(v) for v in obj.values())
            if isinstance(obj, list):
                return all(no_floats(v) for v in obj)
            return True

        assert no_floats(json.loads(out))
