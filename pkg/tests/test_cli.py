import json

from cmrank.cli import run
from cmrank.search import SearchResult, generate_tables


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_text(capsys):
    code, out, _ = invoke(capsys, "count", "--curve", "4", "--ell", "13")
    assert code == 0
    row = out.splitlines()[1].split()
    assert row == ["4", "13", "8", "6", "False"]


def test_count_bad_reduction_exits_1(capsys):
    code, out, err = invoke(capsys, "count", "--curve", "4", "--ell", "2")
    assert code == 1
    assert out == ""
    assert "bad reduction" in err


def test_usage_error_exits_2(capsys):
    code, _, err = invoke(capsys, "count", "--curve", "4")     # missing --ell
    assert code == 2
    assert "--ell" in err
    code, _, _ = invoke(capsys, "bogus-subcommand")
    assert code == 2


def test_unknown_curve_is_domain_error(capsys):
    code, _, err = invoke(capsys, "count", "--curve", "5", "--ell", "13")
    assert code == 1
    assert "label" in err


def test_split_requires_exactly_one_selector(capsys):
    code, _, _ = invoke(capsys, "split", "--curve", "4")
    assert code == 2
    code, _, _ = invoke(capsys, "split", "--curve", "4", "--f", "6", "--ell", "3")
    assert code == 2
    code, out, _ = invoke(capsys, "split", "--curve", "4", "--f", "6",
                          "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [p["ell"] for p in data["primes"]] == [2, 3]


def test_split_ell_must_be_prime(capsys):
    code, _, err = invoke(capsys, "split", "--curve", "4", "--ell", "15")
    assert code == 1
    assert "not prime" in err


def test_out_of_domain_value_exits_2(capsys):
    code, _, err = invoke(capsys, "classnum", "--curve", "4", "--f", "0")
    assert code == 2
    assert "usage error" in err


def test_classnum_both_routes_agree(capsys):
    code, out, _ = invoke(capsys, "classnum", "--curve", "3", "--f", "17",
                          "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["h"] == 6 and data["h_by_forms"] == 6 and data["agree"]


def test_delta_json(capsys):
    code, out, _ = invoke(capsys, "delta", "--curve", "4", "--p", "3",
                          "--ell", "11", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["delta"] == [1, 1] and data["order"] == 12


def test_delta_precondition_exits_1(capsys):
    code, _, err = invoke(capsys, "delta", "--curve", "4", "--p", "3",
                          "--ell", "13")
    assert code == 1
    assert "splits" in err


def test_catalog_validates(capsys):
    code, out, _ = invoke(capsys, "catalog", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["curves"]) == 9
    assert data["validation"]["ok"]


def test_catalog_csv_is_records_only(capsys):
    code, out, _ = invoke(capsys, "catalog", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("D,a1,")
    assert len(lines) == 10


def test_search_json_round_trip(capsys):
    code, out, _ = invoke(capsys, "search", "--case", "m2", "--curve", "11",
                          "--p", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["conductors"] == [2, 29]
    assert data["degree"] == 9
    assert data["prediction"]["branches"][0]["min_rank"] == 9
    assert "Shafarevich-Tate" in data["prediction"]["caveat"]


def test_search_json_round_trips_for_every_table_cell(capsys):
    for cell in generate_tables().all_cells():
        code, out, _ = invoke(capsys, "search", "--case", cell.case.value,
                              "--curve", str(cell.D), "--p", str(cell.p),
                              "--format", "json")
        assert code == 0
        assert SearchResult.from_dict(json.loads(out)) == cell.result


def test_search_not_found_exits_1(capsys):
    code, _, err = invoke(capsys, "search", "--case", "m2", "--curve", "43",
                          "--p", "7", "--bound", "100")
    assert code == 1
    assert "no pair" in err


def test_tables_byte_stable(capsys):
    outputs = []
    for fmt in ("csv", "json", "text", "markdown"):
        first = invoke(capsys, "tables", "--format", fmt)
        second = invoke(capsys, "tables", "--format", fmt)
        assert first == second
        outputs.append(first[1])
    assert all(o for o in outputs)


def test_tables_csv_cells(capsys):
    code, out, _ = invoke(capsys, "tables", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "table,case,D,p,f1,f2,degree,status"
    assert len(lines) == 1 + 24 + 24 + 9
    assert "table1,m0,8,3,43,,3,ok" in lines
    assert "table2,m2,43,7,223,349,49,ok" in lines
    assert "table3,m1,3,5,29,,5,ok" in lines


def test_tables_truncated_bound_exits_1(capsys):
    code, out, err = invoke(capsys, "tables", "--bound", "10", "--format", "csv")
    assert code == 1
    assert "not-found" in out
    assert "not found" in err


def test_help_exits_0(capsys):
    code, out, _ = invoke(capsys, "--help")
    assert code == 0
    assert "tables" in out


def test_selftest_runs_all_suites(capsys):
    code, out, _ = invoke(capsys, "selftest", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"]
    names = {s["name"] for s in data["suites"]}
    assert names == {"catalog-validation", "classnum-forms-equivalence",
                     "pointcount-method-equivalence", "supersingular-iff-inert",
                     "table-delta-consistency"}
    assert all(s["passed"] for s in data["suites"])
