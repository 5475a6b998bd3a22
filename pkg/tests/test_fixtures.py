from shiftcalc.fixtures import CHECKS, fixture_suite


def test_every_fixture_passes():
    report = fixture_suite()
    assert len(report) == len(CHECKS)
    failures = [r for r in report if r["status"] != "pass"]
    assert failures == []
    assert all(set(r) == {"check", "status", "expected", "got"} for r in report)
