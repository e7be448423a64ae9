import json

import pytest

from monmap.verify import (Check, Report, SUITES, report_from_json,
                           report_render, run_suite)


def make_report():
    return Report("demo", {"n": "2"}, [
        Check("first", True, {"value": "2/3"}),
        Check("second", False, {"lhs_num": "1", "lhs_den": "2",
                                "rhs_num": "1", "rhs_den": "3"}),
    ], runtime=1.23)


class TestRender:
    def test_json_round_trip(self):
        report = make_report()
        blob = report_render(report, "json")
        back = report_from_json(blob)
        assert back.suite == report.suite
        assert back.params == report.params
        assert back.checks == report.checks
        assert not back.passed

    def test_runtime_not_serialized(self):
        report = make_report()
        a = report_render(report, "json")
        report.runtime = 99.0
        assert report_render(report, "json") == a

    def test_csv_columns(self):
        blob = report_render(make_report(), "csv").decode()
        lines = blob.splitlines()
        assert lines[0] == "name,passed,lhs_den,lhs_num,rhs_den,rhs_num,value"
        assert lines[1].startswith("first,True")
        assert lines[2].startswith("second,False")

    def test_text_marks_failures(self):
        blob = report_render(make_report(), "text").decode()
        assert "suite demo: FAIL" in blob
        assert "[FAIL] second" in blob

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            report_render(make_report(), "xml")


class TestRunSuite:
    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("no-such-suite")

    def test_fast_suites_pass(self):
        for name in ("mon-examples", "edge-types", "counting",
                     "stanley-special"):
            report = run_suite(name)
            assert report.passed, report_render(report, "text").decode()
            assert report.runtime >= 0

    def test_reports_are_byte_identical_across_runs(self):
        a = report_render(run_suite("mon-examples"), "json")
        b = report_render(run_suite("mon-examples"), "json")
        assert a == b
        c = report_render(run_suite("counting"), "csv")
        d = report_render(run_suite("counting"), "csv")
        assert c == d

    def test_seeded_suite_deterministic(self):
        kwargs = dict(n_exhaustive=1, sampled=(4,), samples=30, seed=5)
        a = report_render(run_suite("degree-bounds", **kwargs), "json")
        b = report_render(run_suite("degree-bounds", **kwargs), "json")
        assert a == b

    def test_main_theorem_small(self):
        report = run_suite("main-theorem", ns=(1, 2))
        assert report.passed
        blob = report_render(report, "csv").decode()
        header = blob.splitlines()[0].split(",")
        for col in ("lhs_num", "lhs_den", "rhs_num", "rhs_den"):
            assert col in header

    def test_every_suite_registered_with_defaults(self):
        assert set(SUITES) == {
            "mon-examples", "edge-types", "lemma-equivalence",
            "degree-bounds", "liberation-nonoriented", "liberation-oriented",
            "main-theorem", "key-bijection", "second-main-theorem",
            "jack-oracle", "stanley-special", "counting"}

    def test_first_failure_surfaces(self):
        report = make_report()
        assert report.first_failure.name == "second"

    def test_bijection_alias(self):
        report = run_suite("bijection", ns=(1,), conservative_n=2)
        assert report.suite == "key-bijection"
        assert report.passed
