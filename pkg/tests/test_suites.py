import pytest

from qschubert.flagcore import FlagType
from qschubert.quantum.suites import SUITES, SuiteReport, verify_suite

F = FlagType.parse


@pytest.mark.parametrize("name", sorted(SUITES))
@pytest.mark.parametrize("text", ["1;2", "1;3", "1,2;3", "2;4"])
def test_suites_pass_on_small_flags(name, text):
    rep = verify_suite(name, F(text))
    assert rep.passed, rep.failures
    assert rep.checked > 0 and rep.failure_count == 0


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass_on_mixed_flag(name):
    rep = verify_suite(name, F("1,3;4"))
    assert rep.passed, rep.failures


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify_suite("nope", F("1;2"))


def test_report_bookkeeping():
    rep = SuiteReport("demo", F("1;2"))
    assert not rep.passed
    for t in range(30):
        rep.record(t % 2 == 0, lambda: f"case {t}")
    assert rep.checked == 30 and rep.failure_count == 15
    assert len(rep.failures) == 15 and rep.failures[0] == "case 1"
    assert rep.summary().startswith("FAIL demo on (1;2): 30 checks, 15 failures")
