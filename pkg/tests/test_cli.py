import json

import pytest

from nilobstruct.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestDelta2Command:
    def test_tangential_point_zero(self, capsys):
        code, payload = run_json(capsys, "delta2", "5", "-5", "--json")
        assert code == 0
        assert payload["delta2"]["global"] == "zero"
        assert payload["delta2"]["witnesses"] == []
        assert payload["point"] == {"b": "5", "a": "-5"}
        assert "delta3_mod2" not in payload

    def test_witness_reported(self, capsys):
        code, payload = run_json(capsys, "delta2", "18", "5", "--json")
        assert code == 0
        assert payload["delta2"]["global"] == "nonzero"
        places = {w["place"] for w in payload["delta2"]["witnesses"]}
        assert "5" in places
        local = {entry["place"]: entry["invariant"] for entry in payload["delta2"]["local"]}
        assert local["5"] == 1 and local["R"] == 0

    def test_human_readable(self, capsys):
        code, out = run(capsys, "delta2", "-1", "5")
        assert code == 0
        assert "delta2 global (mod 2): zero" in out
        assert "delta2 global (full K2): nonzero" in out


class TestDelta3Command:
    def test_json_schema(self, capsys):
        code, payload = run_json(capsys, "delta3", "-1", "5", "--json")
        assert code == 0
        assert "delta2" not in payload
        entries = {e["place"]: e for e in payload["delta3_mod2"]["local"]}
        assert entries["5"]["status"] == "nonzero"
        assert {"case": "i", "applicable": True, "cup": 1} in entries["5"]["cases"]
        assert entries["R"]["status"] == "zero"

    def test_place_filter(self, capsys):
        code, payload = run_json(capsys, "delta3", "-1", "5", "--place", "5", "--json")
        assert code == 0
        assert [e["place"] for e in payload["delta3_mod2"]["local"]] == ["5"]

    def test_unsupported_place_outside_support(self, capsys):
        code, payload = run_json(capsys, "delta3", "3", "7", "--place", "5", "--json")
        assert code == 0
        entries = {e["place"]: e for e in payload["delta3_mod2"]["local"]}
        assert entries["5"]["status"] == "zero"

    def test_place_two_rejected(self, capsys):
        assert main(["delta3", "3", "7", "--place", "2"]) == 2

    def test_real_place_filter(self, capsys):
        code, payload = run_json(capsys, "delta3", "-3", "5", "--place", "R", "--json")
        assert code == 0
        (entry,) = payload["delta3_mod2"]["local"]
        assert entry["place"] == "R" and entry["status"] == "zero"


class TestReportCommand:
    def test_full_schema(self, capsys):
        code, payload = run_json(capsys, "report", "-1", "5", "--json")
        assert code == 0
        assert set(payload) == {"point", "delta2", "delta3_mod2", "notes"}
        assert isinstance(payload["notes"], list)


class TestFamilyCommands:
    def test_specific_lift(self, capsys):
        code, out = run(capsys, "family", "specific-lift", "5")
        assert code == 0
        assert "(1/2, 1/2)" in out

    def test_specific_lift_out_of_family(self, capsys):
        assert main(["family", "specific-lift", "7"]) == 2

    def test_global(self, capsys):
        code, out = run(capsys, "family", "global", "5")
        assert code == 0
        assert "zero" in out

    def test_global_out_of_family(self, capsys):
        assert main(["family", "global", "7"]) == 2


class TestErrors:
    @pytest.mark.parametrize("bad", ("0", "1.5", "x", "1/0"))
    def test_bad_rational(self, capsys, bad):
        assert main(["delta2", bad, "5"]) == 2

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2


def test_verify_fast_subset(capsys):
    code, out = run(capsys, "verify", "--suite", "cochain", "--max-group-order", "2")
    assert code == 0
    assert "[pass]" in out and "FAIL" not in out
    assert "checks passed" in out
