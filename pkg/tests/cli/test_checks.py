import pytest

from lappoly.cli.checks import CHECK_NAMES, CheckContext, expand_names, run_checks
from lappoly.exceptions import BadParameter
from lappoly.graphs import Graph, generate_family


class TestCheckContext:
    def test_sweep(self, p3):
        context = CheckContext(p3)
        assert len(context.deleted_sets()) == 8
        assert frozenset() in context.kept_sets()
        assert context.vertices({2, 0}) == [0, 2]

    def test_no_sweep(self, p3):
        context = CheckContext(p3, sweep=False)
        assert context.deleted_sets() == [frozenset()]
        assert context.kept_sets() == [frozenset({0, 1, 2})]

    def test_large_graph_does_not_sweep(self):
        context = CheckContext(generate_family("path", [9]))
        assert context.deleted_sets() == [frozenset()]

    def test_explicit(self, p3):
        context = CheckContext(p3, subset=frozenset({1}), vertex=1)
        assert context.deleted_sets() == context.kept_sets() == [frozenset({1})]
        assert context.vertices({0, 1, 2}) == [1]


class TestExpandNames:
    def test_all(self):
        assert expand_names(["all"]) == list(CHECK_NAMES)

    def test_order_and_repeats(self):
        assert expand_names(["forest", "tu", "forest", "all"])[:3] == [
            "forest",
            "tu",
            "subdivision",
        ]

    def test_unknown(self):
        with pytest.raises(BadParameter):
            expand_names(["nope"])


class TestRunChecks:
    def test_all_pass_on_paw(self, paw):
        reports = run_checks(CheckContext(paw), ["all"])
        assert all(report.passed for report in reports), [
            report.to_dict() for report in reports if not report.passed
        ]
        names = [report.name for report in reports]
        assert "q-duality[phi_from_beta]" in names
        assert "a-duality[alpha_from_phi]" in names
        assert names[-5:] == [
            "spectral-bound",
            "degree-sum-bound",
            "min-root-bound",
            "interval",
            "zero-sum",
        ]

    def test_swept_summary(self, c4):
        (report,) = run_checks(CheckContext(c4), ["subdivision"])
        assert report.passed
        assert report.details["cases"] == 16
        assert report.details["failures"] == []

    def test_single_case(self, c4):
        context = CheckContext(c4, subset=frozenset({0, 2}))
        (report,) = run_checks(context, ["subdivision"])
        assert report.passed
        assert "residual" in report.to_dict()

    def test_skips(self, triangle):
        reports = {
            report.name: report
            for report in run_checks(CheckContext(triangle), ["grone", "max-matchings"])
        }
        assert reports["grone"].skipped
        assert reports["grone"].details["error"] == "MinDegreeNotOne"
        assert not reports["max-matchings"].skipped

    def test_disconnected_skips(self):
        graph = Graph(4, ((0, 1), (2, 3)))
        reports = {
            report.name: report
            for report in run_checks(CheckContext(graph), ["bounds", "q-duality"])
        }
        assert reports["spectral-bound"].skipped
        assert reports["interval"].skipped
        assert not reports["q-duality[phi_from_beta]"].skipped
        assert all(report.passed for report in reports.values())

    def test_interlacing_skips_vertex_outside_h(self, p4):
        context = CheckContext(p4, subset=frozenset({0, 1}), vertex=3)
        (report,) = run_checks(context, ["interlacing"])
        assert report.skipped
        assert report.details["error"] == "VertexNotInH"

    def test_timings(self, k2):
        context = CheckContext(k2, timings=True)
        reports = run_checks(context, ["coefficients", "zero-sum"])
        assert all(report.elapsed is not None for report in reports)
