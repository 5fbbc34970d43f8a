import json
from fractions import Fraction

import pytest

import pbernoulli
from pbernoulli.bernoulli import pbernoulli_table
from pbernoulli.harness import (
    Cell,
    Report,
    compare,
    run_suite,
    verify_bernoulli,
    verify_corollary1,
    verify_corollary2,
    verify_displayed_egf,
    verify_eq12,
    verify_geometric_egf,
    verify_proposition,
    verify_recurrence,
    verify_routes,
    verify_special_sums,
    verify_stirling2_egf,
    verify_theorem1,
    verify_theorem2,
)
from pbernoulli.numerics import parse_rational


def cell_at(report: Report, **params) -> Cell:
    return next(cell for cell in report.cells if cell.params == params)


def failing_params(report: Report) -> set[tuple]:
    return {tuple(cell.params.values()) for cell in report.failures}


class TestReport:
    def test_compare_renders_canonically(self):
        cell = compare({"p": 1, "n": 1}, Fraction(-2, 6), Fraction(-1, 3))
        assert (cell.lhs, cell.rhs, cell.passed) == ("-1/3", "-1/3", True)
        assert cell.describe() == "p=1, n=1: -1/3 = -1/3"

    def test_failing_cell(self):
        cell = compare({"p": 0}, 1, 2)
        assert not cell.passed
        assert cell.describe() == "p=0: 1 != 2"
        report = Report("demo", [compare({"p": 1}, 0, 0), cell])
        assert not report.all_pass
        assert report.failures == [cell]
        assert report.summary() == "demo: FAIL (1/2 cells)"

    def test_json_shape(self):
        report = Report("demo", [compare({"n": 2}, Fraction(1, 12), Fraction(1, 12))])
        assert json.loads(report.to_json()) == {
            "identity": "demo",
            "all_pass": True,
            "cells": [{"params": {"n": 2}, "lhs": "1/12", "rhs": "1/12", "pass": True}],
        }
        report.notes.append("a remark")
        assert report.to_dict()["notes"] == ["a remark"]

    def test_json_round_trip(self):
        report = verify_theorem2(6, 2)
        data = json.loads(report.to_json())
        assert Report.from_dict(data) == report
        for cell in data["cells"]:
            assert parse_rational(cell["lhs"]) == parse_rational(cell["rhs"])

    def test_to_frame(self):
        frame = verify_corollary2(3).to_frame()
        assert list(frame.columns) == ["identity", "p", "lhs", "rhs", "pass"]
        assert frame["p"].tolist() == [1, 2, 3]
        assert frame["pass"].all()


class TestTheorem1:
    def test_p_zero(self):
        report = verify_theorem1(0, 16)
        assert report.all_pass
        cell = cell_at(report, p=0, n=2)
        assert (cell.lhs, cell.rhs) == ("1/12", "1/12")

    def test_p_one(self):
        report = verify_theorem1(1, 16)
        assert report.all_pass
        assert cell_at(report, p=1, n=1).lhs == "-1/3"

    def test_cells_cover_principal_part_and_coefficients(self):
        report = verify_theorem1(1, 16)
        expected = [(p, n) for p in range(2) for n in range(-(p + 1), 16)]
        assert [(cell.params["p"], cell.params["n"]) for cell in report.cells] == expected
        assert cell_at(report, p=1, n=-2).rhs == "0"

    def test_full_range(self):
        assert verify_theorem1(8, 32).all_pass

    def test_order_precondition(self):
        with pytest.raises(ValueError):
            verify_theorem1(3, 5)

    def test_displayed_forms(self):
        report = verify_displayed_egf(20)
        assert report.all_pass
        assert {cell.params["p"] for cell in report.cells} == {1, 2}


class TestTheorem2:
    def test_hand_checked_cells(self):
        report = verify_theorem2(3, 1)
        assert report.all_pass
        assert cell_at(report, p=1, n=2).lhs == "1"
        assert cell_at(report, p=1, n=3).lhs == "2"
        assert cell_at(report, p=0, n=1).rhs == "1"
        assert [tuple(cell.params.values()) for cell in report.cells] == [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
        ]

    def test_full_range_and_route_independence(self):
        explicit = verify_theorem2(20, 6)
        assert explicit.all_pass
        assert verify_theorem2(20, 6, pbernoulli_table(20, 6)) == explicit

    def test_corrupted_table_is_localized(self):
        table = pbernoulli_table(8, 3)
        corrupted = table.with_cell(3, 2, table[3, 2] + 1)
        report = verify_theorem2(8, 3, corrupted)
        assert failing_params(report) == {(2, 6), (2, 7), (2, 8)}


class TestCorollaries:
    def test_corollary1(self):
        assert verify_corollary1(15, 4).all_pass

    def test_special_sums(self):
        report = verify_special_sums(20)
        assert report.all_pass
        assert cell_at(report, case="first", n=2).lhs == "-1/2"
        assert cell_at(report, case="first", n=3).lhs == "-1"
        assert cell_at(report, case="second", n=3).lhs == "2/3"
        with pytest.raises(ValueError):
            verify_special_sums(2)

    def test_corollary2(self):
        report = verify_corollary2(30)
        assert report.all_pass
        assert cell_at(report, p=1).describe() == "p=1: 0 = 0"
        assert cell_at(report, p=2).lhs == "1"
        with pytest.raises(ValueError):
            verify_corollary2(0)


class TestIntegrals:
    def test_proposition(self):
        report = verify_proposition(15, 5)
        assert report.all_pass
        assert all(cell.params["n"] > cell.params["p"] for cell in report.cells)
        assert report.notes[0].startswith("n <= p cells")

    @pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
    @pytest.mark.parametrize("sample", [Fraction(-1), Fraction(1, 2), Fraction(0)])
    def test_eq12(self, p, sample):
        report = verify_eq12(p, 16, sample)
        assert report.all_pass
        assert len(report.cells) == p + 16
        assert report.cells[0].params == {"p": p, "sample": str(sample), "n": -p}

    def test_eq12_printed_bracket_is_noted(self):
        notes = verify_eq12(2, 12, 0).notes
        assert "disagrees" in notes[-1]
        assert "also agrees" in verify_eq12(1, 12, 0).notes[-1]

    @pytest.mark.parametrize("p", [0, 6])
    def test_eq12_range(self, p):
        with pytest.raises(ValueError):
            verify_eq12(p, 16)


class TestScaffolding:
    def test_routes(self):
        reports = verify_routes(20, 8)
        assert [report.identity for report in reports] == ["recurrence-route", "stirling1-route"]
        assert all(report.all_pass for report in reports)
        assert len(reports[0].cells) == 21 * 9

    def test_recurrence(self):
        assert verify_recurrence(pbernoulli_table(20, 8)).all_pass

    def test_recurrence_with_corrupted_cell(self):
        table = pbernoulli_table(6, 4)
        report = verify_recurrence(table.with_cell(3, 2, table[3, 2] + 1))
        assert failing_params(report) == {(2, 2), (3, 1), (3, 2)}

    def test_stirling2_egf(self):
        assert verify_stirling2_egf(8, 32).all_pass

    def test_geometric_egf(self):
        report = verify_geometric_egf(20)
        assert report.all_pass
        assert {cell.params["x"] for cell in report.cells} == {"1", "-1", "1/2"}

    def test_bernoulli_oracle(self):
        report = verify_bernoulli(24)
        assert report.all_pass
        assert len(report.cells) == 24 + 11


class TestSuite:
    def test_all(self):
        reports = run_suite("all", 12, 4, 24)
        assert all(report.all_pass for report in reports)
        identities = {report.identity for report in reports}
        assert identities == set(pbernoulli.IDENTITY_KEYS)

    def test_unknown_selector(self):
        with pytest.raises(ValueError):
            run_suite("theorem3")

    def test_small_sizes_are_raised(self):
        reports = run_suite("special-sums", 1, 0, 16)
        assert reports[0].all_pass
        assert reports[0].cells[-1].params == {"case": "second", "n": 3}

    def test_low_order_skips_the_hand_written_series(self):
        (report,) = run_suite("theorem1", 6, 0, 4)
        assert report.identity == "theorem1"
        assert report.all_pass
        assert len(report.cells) == 5
        assert any("skipped" in note for note in report.notes)
        reports = run_suite("theorem1", 6, 0, 5)
        assert [report.identity for report in reports] == ["theorem1", "displayed-egf"]
        assert not reports[0].notes

    def test_threads_give_identical_reports(self):
        sequential = run_suite("theorem2", 12, 4)
        pbernoulli.settings.n_jobs = 4
        assert run_suite("theorem2", 12, 4) == sequential

    def test_corrupted_table(self):
        table = pbernoulli_table(10, 4)
        reports = run_suite("routes", 10, 4, table=table.with_cell(5, 1, table[5, 1] + 1))
        route = next(report for report in reports if report.identity == "recurrence-route")
        assert failing_params(route) == {(5, 1)}
