import io
import json

import jsonschema
import pytest

from expansive.cli import run
from expansive.schemas import SCHEMAS


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    data = json.loads(out)
    jsonschema.validate(data, SCHEMAS[argv[0]])
    return data


def test_check_expansive():
    d = call_json("check", "3,0,-1")
    assert d["verdict"]["expansive"] is True
    assert d["verdict"]["witness"] == "all conditions passed"


def test_check_witness():
    d = call_json("check", "1,1,1")
    assert d["verdict"] == {"expansive": False, "method": "d-conditions-full", "witness": "D_1^- = 0",
                            "conditions_checked": 2}


def test_check_negative_first_coefficient():
    assert call_json("check", "-3,0,1")["verdict"]["expansive"] is True


def test_descending_order():
    a = call_json("check", "-1,0,3", "--order", "desc")
    assert a["polynomial"] == [3, 0, -1]


@pytest.mark.parametrize("f", ["3,0,-1", "1,1,1", "2,3,1", "5,1,1,1", "7,-3,2,-1,1", "0,1"])
@pytest.mark.parametrize("strategy", ["full", "reduced", "alternate"])
def test_engine_and_strategy_do_not_change_verdict(f, strategy):
    a = call_json("check", f, "--strategy", strategy)["verdict"]["expansive"]
    b = call_json("check", f, "--engine", "schur-cohn")["verdict"]["expansive"]
    assert a == b


@pytest.mark.parametrize("argv", [("check", ""), ("check", "1,x"), ("check", "0,0"), ("gap", "1,1,1"),
                                  ("gap", "3,0,-1", "--tol", "abc"), ("check",), ("bogus",),
                                  ("search", "--degree", "0", "--a0", "2"),
                                  ("search", "--degree", "4", "--a0", "6", "--box-cap", "10")])
def test_input_errors_exit_one(argv):
    code, out, _ = call(*argv)
    assert code == 1 and out == ""


def test_gap():
    d = call_json("gap", "3,0,-1")
    assert d["report"]["best_real"] == "AZ"
    assert d["report"]["bounds"]["AZ"]["real"] == "4"


def test_gap_certify_and_oracle():
    d = call_json("gap", "3,0,-1", "--certify", "--tol", "1/1000", "--oracle")
    lo = eval(d["certified"]["s_low"].replace("/", "/"))  # noqa: S307 - rational literal
    assert lo <= 3**0.5 <= lo + 1e-3
    assert abs(d["numeric_gap"] - (3**0.5 - 1)) < 1e-12


def test_dpoly_kinds():
    assert call_json("dpoly", "3,0,-1", "--k", "1", "--sign", "-")["coeffs"] == [3, 0, 1]
    assert call_json("dpoly", "3,0,-1", "--kind", "pair")["coeffs"] == [3, 1]
    assert call_json("dpoly", "3,0,-1", "--kind", "resultant")["coeffs"] == [81, 0, -18, 0, 1]
    t = call_json("dpoly", "--kind", "terms", "--n", "5")
    assert t["raw_terms"] == 40 and t["collected_terms"] == 31


def test_roots():
    d = call_json("roots", "3,0,-1")
    assert d["numeric_expansive"] is True
    assert len(d["roots"]) == 2


def test_search_formats():
    d = call_json("search", "--degree", "2", "--a0", "2")
    assert d["expansive"] == 6
    code, out, _ = call("search", "--degree", "2", "--a0", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "a_0,a_1,a_2" and len(lines) == 7


def test_bench_small():
    d = call_json("bench", "--degree", "4", "--height", "2^10", "--trials", "2")
    assert d["height"] == 1024
    code, out, _ = call("bench", "--degree", "4", "--height", "2^10", "--trials", "2", "--format", "csv")
    assert code == 0 and out.startswith("csv_version,")


def test_table_format():
    code, out, _ = call("check", "3,0,-1", "--format", "table")
    assert code == 0 and "expansive" in out and "True" in out


def test_out_file(tmp_path):
    target = tmp_path / "v.json"
    code, out, _ = call("check", "3,0,-1", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["verdict"]["expansive"] is True


def test_help_exits_zero():
    assert call("--help")[0] == 0
