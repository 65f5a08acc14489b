import io
import json

import pytest

from dumont.cli import main


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_enumerate_lines():
    code, out = run_cli("enumerate", "--kind", "4", "--size", "4")
    assert code == 0
    assert out.splitlines() == ["1234", "1342", "1432"]


def test_enumerate_json():
    code, out = run_cli("enumerate", "--kind", "1", "--size", "4", "--format", "json")
    payload = json.loads(out)
    assert payload == {"kind": 1, "size": 4, "count": 3,
                       "elements": ["2143", "3421", "4213"]}


def test_enumerate_csv():
    code, out = run_cli("enumerate", "--kind", "2", "--size", "2", "--format", "csv")
    assert out.splitlines() == ["permutation", "21"]


def test_enumerate_odd_size_is_an_error():
    code, out = run_cli("enumerate", "--kind", "1", "--size", "3")
    assert code == 2


def test_avoid_count_and_list():
    code, out = run_cli("avoid", "--kind", "4", "--size", "8",
                        "--pattern", "1342", "--format", "json")
    payload = json.loads(out)
    assert payload["count"] == 8
    assert payload["patterns"] == ["1342"]
    assert payload["exactly"] is None
    assert "elements" not in payload

    code, out = run_cli("avoid", "--kind", "4", "--size", "8",
                        "--pattern", "1342", "--list", "--format", "json")
    payload = json.loads(out)
    assert "16325478" in payload["elements"]
    assert payload["count"] == 8


def test_avoid_multiple_patterns():
    code, out = run_cli("avoid", "--kind", "1", "--size", "8",
                        "--pattern", "1342,1423", "--format", "json")
    assert json.loads(out)["count"] == 45


def test_avoid_exactly():
    code, out = run_cli("avoid", "--kind", "4", "--size", "6",
                        "--pattern", "321", "--exactly", "1", "--format", "json")
    payload = json.loads(out)
    assert payload["count"] == 7
    assert payload["exactly"] == 1


def test_map_subcommands():
    cases = [
        (["map", "--name", "foata", "--input", "435621"], "614352"),
        (["map", "--name", "foata-inv", "--input", "614352"], "435621"),
        (["map", "--name", "dyck", "--input", "1,3,5,2,6,4,7,8,9,11,12,10"],
         "EENENNENEENN"),
        (["map", "--name", "dyck-inv", "--input", "EENN"], "1342"),
        (["map", "--name", "comp", "--input", "16325478"], "3+1"),
        (["map", "--name", "comp-inv", "--input", "3+1"], "16325478"),
        (["map", "--name", "reflect-inv",
          "--input", "1,8,3,4,5,6,7,9,10,11,12,2,13,14,15,16"],
         "1,2,3,4,5,7,8,9,10,16,11,12,13,14,15,6"),
    ]
    for argv, expected in cases:
        code, out = run_cli(*argv)
        assert code == 0, argv
        assert out.strip() == expected


def test_map_split321_json():
    code, out = run_cli("map", "--name", "split321", "--input", "135462",
                        "--format", "json")
    assert json.loads(out) == {"rho1": "1342", "rho2": "1342", "case": "even_b"}


def test_map_rejects_bad_input():
    code, _ = run_cli("map", "--name", "dyck", "--input", "1432")
    assert code == 2


def test_series_values():
    code, out = run_cli("series", "--id", "little_schroder", "--upto", "7",
                        "--format", "json")
    payload = json.loads(out)
    assert payload["start"] == 1
    assert payload["values"] == [1, 1, 3, 11, 45, 197, 903]

    code, out = run_cli("series", "--id", "a343795_d4_312", "--upto", "11",
                        "--format", "csv")
    rows = out.splitlines()
    assert rows[0] == "n,value"
    assert rows[1] == "0,1"
    assert rows[-1] == "11,7803860"


def test_series_cross_check():
    code, out = run_cli("series", "--id", "a343795_d4_312", "--order", "24",
                        "--cross-check")
    assert code == 0
    assert "consistent" in out


def test_verify_suite():
    code, out = run_cli("verify", "--suite", "d4_single", "--max-n", "4")
    assert code == 0
    assert out.endswith("overall PASS\n")
    code, out = run_cli("verify", "--suite", "d4_single", "--max-n", "4",
                        "--format", "json")
    payload = json.loads(out)
    assert payload["overall"] is True


def test_verify_csv():
    code, out = run_cli("verify", "--suite", "d4_single", "--max-n", "2",
                        "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "theorem,n,enumerated,formula,match"
    assert "d4_321_once,2,1,1,True" in out


def test_verify_sanity_s3():
    code, out = run_cli("verify", "--sanity-s3", "4")
    assert code == 0
    assert "s3_123" in out


def test_verify_reports_mismatch_with_exit_1():
    code, out = run_cli("verify", "--suite", "d1_pairs", "--max-n", "4")
    assert code == 1
    assert "MISMATCH" in out


def test_verify_determinism():
    _, first = run_cli("verify", "--suite", "all", "--max-n", "3")
    _, second = run_cli("verify", "--suite", "all", "--max-n", "3")
    assert first == second


def test_conjecture_1():
    code, out = run_cli("conjecture", "--which", "1", "--n", "3",
                        "--format", "json")
    payload = json.loads(out)
    assert payload["equinumerous"] is True
    assert payload["rows"][3] == {"n": 3, "count_2143": 7, "count_3421": 7,
                                  "reference": 7, "match": True}


def test_conjecture_2():
    code, out = run_cli("conjecture", "--which", "2", "--n", "3",
                        "--format", "json")
    payload = json.loads(out)
    assert sum(payload["a_row"]) == sum(payload["b_row"]) == 7
    assert payload["verdict"]["totals_equal"] is True


def test_conjecture_budget_exit_code(tmp_path):
    code, out = run_cli("conjecture", "--which", "1", "--n", "5",
                        "--budget", "0", "--checkpoint", str(tmp_path / "c"))
    assert code == 3
    assert "resume" in out


def test_diagram():
    code, out = run_cli("diagram", "12")
    assert out == ".*\n*.\n"
    code, out = run_cli("diagram", "")
    assert out == ""
