import csv
import io
import json
import subprocess
import sys

import pytest

from braidgenus.cli import CSV_COLUMNS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["floor", "B2: 1 1 1"], "floor = 1"),
        (["alexander", "B3: 1 -2 1 -2"], "1 - 3*t + t^2"),
        (["compare", "B3: 1", "B3: 2"], "greater (sigma_2 <_D sigma_1)"),
        (["compare", "B3: 2", "B3: 1"], "less (sigma_2 <_D sigma_1)"),
        (["compare", "B3: 1 2 1", "B3: 2 1 2"], "equal (sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2)"),
        (["reduce", "B3: 1 2 -1"], "B3: -2 1 2\nclass = sigma_1-positive"),
        (["reduce", "B3: 1 -1"], "B3:\nclass = empty"),
    ],
)
def test_text_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected + "\n"


def test_genus_text(capsys):
    code, out, _ = run(capsys, "genus", "B2: 1 1 1 1 1")
    assert code == 0
    assert out.splitlines()[0] == "genus in [2, 2]"


class TestExitCodes:
    @pytest.mark.parametrize("text", ["B3: 3", "B1:", "B3: 0", "nonsense"])
    def test_parse_error(self, capsys, text):
        code, out, err = run(capsys, "floor", text)
        assert code == 2 and out == ""
        assert "error" in err

    def test_parse_error_is_position_annotated(self, capsys):
        _, _, err = run(capsys, "floor", "B3: 1 2 7")
        assert "^" in err

    def test_strand_mismatch(self, capsys):
        assert run(capsys, "compare", "B3: 1", "B4: 1")[0] == 2

    def test_non_knot(self, capsys):
        assert run(capsys, "alexander", "B2: 1 1")[0] == 2
        assert run(capsys, "genus", "B3:")[0] == 2

    def test_bad_flag(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["floor", "--format", "xml", "B2: 1"])
        assert info.value.code == 2
        with pytest.raises(SystemExit) as info:
            main(["sample", "--max-strands", "1"])
        assert info.value.code == 2

    def test_verify_passes(self, capsys):
        assert run(capsys, "verify", "B3: 1 -2 1 -2")[0] == 0

    def test_step_limit(self, capsys):
        code, _, err = run(capsys, "reduce", "--step-limit", "1", "B4: 1 2 3 -2 -1 2 -3")
        assert code == 1 and "exceeded" in err

    def test_verification_failure_exit(self, capsys, monkeypatch):
        from braidgenus import bounds

        monkeypatch.setattr(bounds, "dehornoy_floor", lambda w, limit: type("F", (), {"floor": 9})())
        assert run(capsys, "verify", "B2: 1 1 1")[0] == 1


def test_verify_json_roundtrip(capsys):
    _, text, _ = run(capsys, "verify", "B3: 1 -2 1 -2")
    _, raw, _ = run(capsys, "verify", "--format", "json", "B3: 1 -2 1 -2")
    rec = json.loads(raw)
    fields = dict(line.split(" = ", 1) for line in text.splitlines() if " = " in line)
    assert fields["braid"] == rec["braid"]
    assert int(fields["floor"]) == rec["floor"]
    assert int(fields["chi_lower"]) == rec["chi_lower"]
    assert int(fields["chi_connected_lower"]) == rec["chi_connected_lower"]
    assert fields["genus"] == f"[{rec['genus_lower']}, {rec['genus_upper']}]"
    check_lines = [line for line in text.splitlines() if line.startswith(("ok", "FAIL"))]
    assert len(check_lines) == len(rec["checks"])
    for line, c in zip(check_lines, rec["checks"]):
        assert line.split(None, 1)[1] == f"{c['name']}: {c['lhs']} {c['relation']} {c['rhs']}"


def _json(capsys, *argv):
    code, raw, _ = run(capsys, argv[0], "--format", "json", *argv[1:])
    assert code == 0
    return json.loads(raw)


def test_json_matches_text_for_single_commands(capsys):
    assert f"floor = {_json(capsys, 'floor', 'B2: 1 1 1')['floor']}" == "floor = 1"
    assert _json(capsys, "alexander", "B3: 1 -2 1 -2")["alexander"] == "1 - 3*t + t^2"
    rec = _json(capsys, "compare", "B3: 1", "B3: 2")
    assert f"{rec['result']} ({rec['relation']})" == "greater (sigma_2 <_D sigma_1)"
    rec = _json(capsys, "reduce", "B3: 1 2 -1")
    assert (rec["reduced"], rec["sigma_class"], rec["main_index"]) == ("B3: -2 1 2", "positive", 1)


def test_genus_json_matches_text(capsys):
    _, text, _ = run(capsys, "genus", "B3: 1 2 1 2 1 2 1 2")
    rec = _json(capsys, "genus", "B3: 1 2 1 2 1 2 1 2")
    assert text.splitlines() == [
        f"genus in [{rec['genus_lower']}, {rec['genus_upper']}]",
        f"lower = {rec['genus_lower']} ({rec['lower_source']})",
        f"upper = {rec['genus_upper']} ({rec['upper_source']})",
        f"floor = {rec['floor']}, floor bound = {rec['floor_genus_lower']}",
    ]
    assert (rec["genus_lower"], rec["genus_upper"], rec["floor"]) == (3, 3, 1)


def test_verify_csv(capsys):
    _, out, _ = run(capsys, "verify", "--format", "csv", "B2: 1 1 1")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == CSV_COLUMNS
    assert rows[0]["braid"] == "B2: 1 1 1"
    assert rows[0]["len"] == "3" and rows[0]["floor"] == "1"
    assert rows[0]["check_theorem-chi"] == "true"


def test_link_csv_leaves_knot_columns_empty(capsys):
    _, out, _ = run(capsys, "verify", "--format", "csv", "B2: 1 1")
    row = next(csv.DictReader(io.StringIO(out)))
    assert row["g_lower"] == "" and row["check_corollary-upper"] == ""


class TestSample:
    def test_zero_trials(self, capsys):
        code, out, _ = run(capsys, "sample", "--trials", "0")
        assert code == 0
        assert "samples = 0" in out and "failed = 0" in out

    def test_deterministic(self, capsys):
        argv = ["sample", "--trials", "60", "--seed", "17", "--format", "json"]
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second
        rec = json.loads(first[1])
        assert rec["samples"] == 120 and rec["failed"] == 0 and first[0] == 0

    def test_csv_header_only_when_clean(self, capsys):
        _, out, _ = run(capsys, "sample", "--trials", "10", "--format", "csv")
        assert out.strip().split(",") == ["kind", "index"] + CSV_COLUMNS


class TestCatalogue:
    def test_rows(self, capsys):
        code, out, _ = run(capsys, "catalogue", "--format", "json")
        assert code == 0
        rows = {r["name"]: r for r in json.loads(out)}
        assert rows["trefoil"]["floor"] == 1 and rows["trefoil"]["genus"] == 1
        assert rows["trefoil"]["corollary_rhs"] == "2/1"
        assert rows["unknot"]["floor"] == 0 and rows["unknot"]["genus"] == 0
        assert rows["T(3,4)"]["genus"] == 3
        assert all(r["theorem_holds"] and r["corollary_holds"] for r in rows.values())

    def test_text_table(self, capsys):
        code, out, _ = run(capsys, "catalogue")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 7
        assert "FAIL" not in out
        trefoil = next(line for line in lines if line.startswith("trefoil"))
        assert "1 < 2/1" in trefoil

    def test_certification_failure(self, capsys, monkeypatch):
        from braidgenus import cli
        from braidgenus.bounds import CertificationError

        def broken():
            raise CertificationError("bad entry")

        monkeypatch.setattr(cli, "catalogue", broken)
        code, _, err = run(capsys, "catalogue")
        assert code == 1 and "bad entry" in err


def test_module_entry_point_is_byte_stable():
    cmd = [sys.executable, "-m", "braidgenus", "sample", "--trials", "25", "--seed", "5"]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    assert a.stdout == b.stdout
    assert b"samples = 50" in a.stdout
