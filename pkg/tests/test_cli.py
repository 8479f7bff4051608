"""Command-line interface: output contracts, exit codes, determinism."""

import json

from arcperm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_arc(capsys):
    code, out, _ = run(capsys, "enumerate", "--set", "arc", "--n", "4")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == 17
    assert lines[-1] == "count 16"


def test_enumerate_b_arc_n1(capsys):
    code, out, _ = run(capsys, "enumerate", "--set", "b-arc", "--n", "1")
    assert code == 0
    assert out.strip().splitlines() == ["[1]", "[-1]", "count 2"]


def test_enumerate_rejects_bad_input(capsys):
    code, _, err = run(capsys, "enumerate", "--set", "arc", "--n", "0")
    assert code == 2
    code, _, _ = run(capsys, "enumerate", "--set", "nosuch", "--n", "3")
    assert code == 2


def test_enumerate_guard_and_force(capsys):
    code, _, err = run(capsys, "enumerate", "--set", "sym", "--n", "10")
    assert code == 2 and "guard" in err
    code, _, err = run(capsys, "enumerate", "--set", "arc", "--n", "13")
    assert code == 2 and "guard" in err
    code, out, err = run(capsys, "enumerate", "--set", "arc", "--n", "13", "--force")
    assert code == 0 and "warning" in err
    assert out.strip().splitlines()[-1] == f"count {13 * 2**11}"


def test_enumerate_csv_schema(capsys):
    code, out, _ = run(capsys, "enumerate", "--set", "arc", "--n", "2", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "index,permutation"
    assert lines[1] == '1,"[1,2]"'
    assert lines[-1] == "count,2"


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--set", "signed-arc", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert data["count"] == 8
    assert len(data["items"]) == 8


def test_stats_lines(capsys):
    code, out, _ = run(capsys, "stats", "--perm", "[2,-1,3]")
    assert code == 0
    assert "fmaj 3" in out
    assert "fdes 2" in out
    assert "sign 1" in out


def test_stats_identity_and_group_a(capsys):
    code, out, _ = run(capsys, "stats", "--perm", "[1,2,3]")
    assert "fmaj 0" in out and "neg 0" in out
    code, out, _ = run(capsys, "stats", "--perm", "231", "--group", "A")
    assert "maj 2" in out and "inv 2" in out


def test_stats_parse_error(capsys):
    code, _, err = run(capsys, "stats", "--perm", "[2,2]")
    assert code == 2
    assert "2" in err


def test_stats_json(capsys):
    code, out, _ = run(capsys, "stats", "--perm", "[-2,-1]", "--format", "json")
    data = json.loads(out)
    assert data["fmaj"] == 4 and data["fdes"] == 3 and data["des_set"] == [1]


def test_check_member(capsys):
    code, out, _ = run(capsys, "check", "--perm", "12543", "--set", "arc")
    assert code == 0
    assert out.strip() == "MEMBER"


def test_check_non_member_with_witness(capsys):
    code, out, _ = run(capsys, "check", "--perm", "[-2,1,3]", "--set", "signed-arc")
    assert code == 0
    assert "NON-MEMBER" in out
    assert "reason:" in out
    assert "pattern: [-2,1,3]" in out


def test_check_b_arc(capsys):
    code, out, _ = run(capsys, "check", "--perm", "[5,2,-1,4,3]", "--set", "b-arc")
    assert "NON-MEMBER" in out
    code, out, _ = run(capsys, "check", "--perm", "[-2,3,-1]", "--set", "b-arc")
    assert out.strip() == "MEMBER"


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--perm", "[-2,1,3]", "--set", "signed-arc",
                       "--format", "json")
    data = json.loads(out)
    assert data["member"] is False
    assert data["pattern_witness"]["positions"] == [1, 2, 3]


def test_decompose_a(capsys):
    code, out, _ = run(capsys, "decompose", "--group", "A", "--perm", "231")
    assert code == 0
    assert "A k=[0,2]" in out
    assert "maj 2" in out
    assert "arc_by_exponents True" in out
    assert "recomposed [2,3,1]" in out


def test_decompose_b(capsys):
    code, out, _ = run(capsys, "decompose", "--group", "B", "--perm", "[-1]")
    assert "B k=[1]" in out and "fmaj 1" in out
    code, out, _ = run(capsys, "decompose", "--group", "B", "--perm", "[1,2,3]")
    assert "B k=[0,0,0]" in out


def test_verify_single_formula(capsys):
    code, out, _ = run(capsys, "verify", "--formula", "f_A_maj", "--n-max", "10")
    assert code == 0
    assert out.count("EQUAL") >= 9
    assert "summary: 9 EQUAL, 0 MISMATCH, 1 OUT_OF_STATED_RANGE" in out


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--formula", "all", "--n-max", "8")
    assert code == 0
    assert "0 MISMATCH" in out


def test_verify_unknown_formula(capsys):
    code, _, err = run(capsys, "verify", "--formula", "nosuch")
    assert code == 2
    assert "unknown formula" in err


def test_verify_negative_control(capsys):
    code, out, _ = run(capsys, "verify", "--formula", "negative-control", "--n-max", "4")
    assert code == 1
    assert "MISMATCH" in out
    assert "diff:" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--formula", "f_A_des", "--n-max", "4",
                       "--format", "json")
    rows = json.loads(out)
    assert [r["status"] for r in rows] == [
        "OUT_OF_STATED_RANGE", "OUT_OF_STATED_RANGE", "EQUAL", "EQUAL",
    ]
    assert rows[0]["lhs"] is None and rows[0]["rhs"] is not None


def test_table_fdes(capsys):
    code, out, _ = run(capsys, "table", "--stat", "fdes", "--set", "b-arc", "--n", "2")
    assert out.strip().splitlines() == ["0 1", "1 3", "2 3", "3 1", "total 8"]


def test_table_maj_arc(capsys):
    code, out, _ = run(capsys, "table", "--stat", "maj", "--set", "arc", "--n", "2")
    assert out.strip().splitlines() == ["0 1", "1 1", "total 2"]


def test_table_csv_schema(capsys):
    code, out, _ = run(capsys, "table", "--stat", "des", "--set", "arc", "--n", "3",
                       "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "value,count"
    assert lines[1:] == ["0,1", "1,4", "2,1"]


def test_table_inv_note_and_invalid_pairs(capsys):
    code, out, _ = run(capsys, "table", "--stat", "inv", "--set", "b-arc", "--n", "2")
    assert code == 0
    assert "absolute word" in out
    code, _, err = run(capsys, "table", "--stat", "fdes", "--set", "arc", "--n", "3")
    assert code == 2 and "signed set" in err


def test_table_row_sums(capsys):
    code, out, _ = run(capsys, "table", "--stat", "neg", "--set", "b-arc", "--n", "4",
                       "--format", "json")
    data = json.loads(out)
    assert data["total"] == 4 * 2**4
    assert sum(data["counts"].values()) == data["total"]


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.txt"
    code, out, _ = run(capsys, "enumerate", "--set", "arc", "--n", "2", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().strip().splitlines() == ["[1,2]", "[2,1]", "count 2"]


def test_byte_identical_reruns(capsys):
    first = run(capsys, "verify", "--formula", "f_AB_des_set", "--n-max", "6", "--format", "json")
    second = run(capsys, "verify", "--formula", "f_AB_des_set", "--n-max", "6", "--format", "json")
    assert first == second
