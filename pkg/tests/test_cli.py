import json

import pytest

from revdickson.cli import SEARCH_COLUMNS, main, parse_report, read_report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def usage_exit(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    return exc.value.code


def test_eval_single(capsys):
    assert run(capsys, "eval", "--q", "5", "--n", "2", "--a", "1")[:2] == (0, "4\n")


def test_eval_table(capsys):
    code, out, _ = run(capsys, "eval", "--q", "5", "--n", "1", "--format", "csv")
    assert code == 0
    assert [r["value"] for r in parse_report(out)["records"]] == [1] * 5
    _, out, _ = run(capsys, "eval", "--q", "4", "--n", "3", "--format", "json")
    # d_3 = 1 + a in characteristic 2; adding 1 flips the low bit of the code
    assert [r["value"] for r in json.loads(out)["records"]] == [1, 0, 3, 2]


@pytest.mark.parametrize("q,n,value", [(5, 2, 0), (4, 3, 1)])
def test_sum_both(capsys, q, n, value):
    code, out, _ = run(capsys, "sum", "--q", str(q), "--n", str(n), "--power", "3", "--method", "both")
    rec = json.loads(out)["records"][0]
    assert code == 0
    assert (rec["closed"], rec["oracle"], rec["match"]) == (value, value, True)


def test_sum_with_p_and_e(capsys):
    code, out, _ = run(capsys, "sum", "--p", "2", "--e", "2", "--n", "3", "--power", "1", "--method", "both")
    assert code == 0 and json.loads(out)["records"][0]["match"]


def test_usage_errors():
    assert usage_exit(["sum", "--q", "5", "--n", "24", "--power", "3", "--method", "closed"]) == 2
    assert usage_exit(["sum", "--q", "5", "--n", "2", "--power", "2", "--method", "closed"]) == 2
    assert usage_exit(["eval", "--q", "6", "--n", "2"]) == 2
    assert usage_exit(["eval", "--q", "4", "--p", "3", "--e", "1", "--n", "2"]) == 2
    assert usage_exit(["verify", "--qset", "5,6"]) == 2
    assert usage_exit(["search", "--q", "1024"]) == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--qset", "5", "--suite", "sums", "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert report["records"] == [{"suite": "sums", "q": 5, "checked": 23, "failed": 0, "status": "pass"}]
    code, _, _ = run(capsys, "verify", "--qset", "2,3,4,5", "--suite", "identities")
    assert code == 0


def test_search_csv(capsys):
    code, out, err = run(capsys, "search", "--q", "5", "--filters", "off")
    assert code == 0
    assert out.splitlines()[0] == ",".join(SEARCH_COLUMNS)
    records = parse_report(out)["records"]
    assert [r["n"] for r in records] == list(range(1, 24))
    desirable = {r["n"] for r in records if r["is_permutation"]}
    assert {2, 3} <= desirable
    assert "summary" in err


def test_search_not_applicable(capsys):
    _, out, _ = run(capsys, "search", "--q", "4")
    assert {r["filter_verdict"] for r in parse_report(out)["records"]} == {"not_applicable"}


def test_json_round_trip(tmp_path, capsys):
    path = tmp_path / "s.json"
    code, out, _ = run(capsys, "search", "--q", "7", "--format", "json", "--out", str(path))
    assert code == 0 and "summary" in out
    report = read_report(path)
    assert report["meta"]["config"]["q"] == 7
    assert report["meta"]["version"]
    assert len(report["records"]) == 47
    assert list(report["records"][0]) == SEARCH_COLUMNS


def test_field_info(capsys):
    code, out, _ = run(capsys, "field-info", "--q", "4")
    assert code == 0 and "GF(4)" in out
