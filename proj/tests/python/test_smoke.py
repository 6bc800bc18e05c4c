import json

import pytest

import betacert


def test_root_and_threshold():
    lo, hi = betacert.bonacci_root(10)
    assert lo.startswith("1.99901863271010") and hi.startswith("1.99901863271010")
    assert [betacert.k_threshold(m) for m in range(1, 6)] == [31, 32, 32, 32, 33]


def test_tables_report_rows():
    report = betacert.tables()
    assert len(report["table1"]) == 5
    assert len(report["table2"]) == 5


def test_certify_interval_schema():
    cert = betacert.certify_a(1, 31)
    for key in ("claim", "params", "checks", "results", "notes", "evidence_depth", "grade",
                "hypothesis_met", "certified", "wall_time_ms"):
        assert key in cert
    assert cert["certified"]


def test_certify_b_without_count():
    cert = betacert.certify_b(10, "qk:10", run_count=False)
    assert cert["certified"]


def test_thickness_and_count():
    t = betacert.thickness("qk:10", 9, 24)
    assert float(t["tau"][0]) > 1.999 ** 6
    c = betacert.count("1.5", "0", 50)
    assert c["levels"][-1]["certified_min"] == 1


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        betacert.k_threshold(0)
    with pytest.raises(ValueError):
        betacert.certify_b(8)


def test_cli_entry():
    code, out, _ = betacert.run_cli("certify", "--m", "1", "--k", "31", "--interval")
    assert code == 0
    assert json.loads(out)["certified"]
