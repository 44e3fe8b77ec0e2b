import json

from pclatt.lawsuite import SuiteEntry, SuiteReport, format_counterexample, run_suite


def test_fixtures_only_lem1_i():
    report = run_suite(1, laws=["lem1-i"], min_n=2)
    by_name = {e.lattice: e for e in report.entries}
    assert set(by_name) == {"fig1a", "fig1b", "fig1c"}
    a = by_name["fig1a"]
    assert not a.holds and not a.hypothesis_met and not a.fatal
    assert a.counterexample["assignment"] == {"a": "c", "b": "a"}
    assert by_name["fig1b"].holds and by_name["fig1b"].hypothesis_met
    assert report.informational == [a]
    assert report.fatal == []


def test_json_round_trip():
    report = run_suite(4)
    text = report.to_json()
    back = SuiteReport.from_json(text)
    assert back == report
    assert back.to_json() == text
    assert all(set(d) == {"lattice", "law", "hypothesis_met", "holds", "counterexample"}
               for d in json.loads(text))


def test_summary_and_text():
    report = run_suite(3, laws=["lem1-i", "th1-i"])
    s = report.summary()
    assert s["fatal"] == 0 and s["checks"] == len(report.entries)
    text = report.render_text()
    assert text.splitlines()[-1].endswith("informational failures")
    assert "fig1a" in text and "lem1-i" in text


def test_fatal_entry():
    e = SuiteEntry("x", "lem1-i", True, False, {"assignment": {}, "lhs": "a", "lhs_value": "1",
                                                "relation": "≤", "rhs": "b", "rhs_value": "0"})
    assert e.fatal
    assert "FATAL" in SuiteReport([e]).render_text()


def test_format_counterexample():
    ce = {"assignment": {"a": "c", "b": "a"}, "lhs": "a∧(a→b)", "lhs_value": "c",
          "relation": "≤", "rhs": "b", "rhs_value": "a"}
    assert format_counterexample(ce) == "[a:=c, b:=a] a∧(a→b) ≤ b fails: a∧(a→b) is c, b is a"
