"""The registry mapping `--identity` and `--checks` names to verifiers."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple

from lappoly.analysis import (
    degree_majorization_check,
    grone_sequence_check,
    matching_interlacing_check,
    principal_zero_sum_check,
    vertex_interlacing_check,
)
from lappoly.exceptions import (
    BadParameter,
    PreconditionException,
    TooLarge,
    VerificationException,
)
from lappoly.graphs import Graph
from lappoly.identities import (
    ADJACENCY_DIRECTIONS,
    Q_DIRECTIONS,
    adjacency_duality,
    degree_sum_bound_check,
    forest_characterization,
    hl_interval_check,
    min_root_bound_check,
    q_duality,
    spectral_bound_check,
    subdivision_identity_check,
)
from lappoly.matchings import coefficients_check
from lappoly.spectra import subdivision_spectra_check
from lappoly.tu_subgraphs import (
    fiber_size_check,
    tree_unicyclic_max_matching_check,
    tu_coefficients_check,
)
from lappoly.utils.config import DEFAULT_TOL, MAX_ENUMERATION_ORDER, SUBSET_SWEEP_LIMIT
from lappoly.utils.report import CheckReport

# failing cases kept in the details of a swept check
_MAX_REPORTED_FAILURES = 5


@dataclass(frozen=True)
class CheckContext:
    """One graph and the options every check on it shares."""

    graph: Graph
    tol: float = DEFAULT_TOL
    subset: Optional[FrozenSet[int]] = None
    vertex: Optional[int] = None
    sweep: bool = True
    timings: bool = False

    def _all_subsets(self: CheckContext) -> List[FrozenSet[int]]:
        vertices = range(self.graph.n)
        return [
            frozenset(chosen)
            for size in range(self.graph.n + 1)
            for chosen in itertools.combinations(vertices, size)
        ]

    def _sweeping(self: CheckContext) -> bool:
        return self.sweep and self.graph.n <= SUBSET_SWEEP_LIMIT

    def deleted_sets(self: CheckContext) -> List[FrozenSet[int]]:
        """
        The sets W to delete for the subdivision checks.

        Returns:
            The explicit subset, every subset when sweeping, else only W = ∅.
        """
        if self.subset is not None:
            return [self.subset]
        if self._sweeping():
            return self._all_subsets()
        return [frozenset()]

    def kept_sets(self: CheckContext) -> List[FrozenSet[int]]:
        """
        The sets H to keep for the principal checks.

        Returns:
            The explicit subset, every subset when sweeping, else only H = V(G).
        """
        if self.subset is not None:
            return [self.subset]
        if self._sweeping():
            return self._all_subsets()
        return [frozenset(range(self.graph.n))]

    def vertices(self: CheckContext, within: Iterable[int]) -> List[int]:
        """
        The vertices v to delete for the interlacing checks.

        Args:
            within: The candidate vertices.

        Returns:
            The explicit vertex if one was given, else every candidate.
        """
        if self.vertex is not None:
            return [self.vertex]
        return sorted(within)


CheckRunner = Callable[[CheckContext], List[CheckReport]]


def _guarded(
    context: CheckContext, name: str, run: Callable[[], CheckReport]
) -> CheckReport:
    start = time.perf_counter()
    try:
        report = run()
    except PreconditionException as e:
        report = CheckReport.skip(name, e)
    except VerificationException as e:
        report = CheckReport(name, passed=False, details=e.to_dict())
    if context.timings:
        report.elapsed = time.perf_counter() - start
    return report


def _sweep(
    context: CheckContext, name: str, cases: List[Callable[[], CheckReport]]
) -> CheckReport:
    reports = [_guarded(context, name, case) for case in cases]
    if len(reports) == 1:
        return reports[0]
    failures = [report.to_dict() for report in reports if not report.passed]
    summary = CheckReport(
        name,
        passed=not failures,
        skipped=bool(reports) and all(report.skipped for report in reports),
        details={
            "cases": len(reports),
            "skipped_cases": sum(report.skipped for report in reports),
            "failed_cases": len(failures),
            "failures": failures[:_MAX_REPORTED_FAILURES],
        },
    )
    if context.timings:
        summary.elapsed = sum(report.elapsed or 0.0 for report in reports)
    return summary


def _require_small(graph: Graph, name: str) -> None:
    if graph.n > MAX_ENUMERATION_ORDER:
        raise TooLarge(
            f"{name} enumerates subgraphs; n = {graph.n} exceeds "
            f"{MAX_ENUMERATION_ORDER}.",
            {"check": name},
        )


def _subdivision(context: CheckContext) -> List[CheckReport]:
    graph = context.graph
    return [
        _sweep(
            context,
            "subdivision",
            [
                lambda w=w: subdivision_identity_check(graph, w)
                for w in context.deleted_sets()
            ],
        )
    ]


def _spectra(context: CheckContext) -> List[CheckReport]:
    graph = context.graph
    return [
        _sweep(
            context,
            "subdivision-spectra",
            [
                lambda w=w: subdivision_spectra_check(graph, w)
                for w in context.deleted_sets()
            ],
        )
    ]


def _coefficients(context: CheckContext) -> List[CheckReport]:
    return [
        _guarded(context, "coefficients", lambda: coefficients_check(context.graph))
    ]


def _tu(context: CheckContext) -> List[CheckReport]:
    def run() -> CheckReport:
        _require_small(context.graph, "tu")
        return tu_coefficients_check(context.graph)

    return [_guarded(context, "tu", run)]


def _fibers(context: CheckContext) -> List[CheckReport]:
    graph = context.graph

    def run(r: int) -> CheckReport:
        _require_small(graph, "fibers")
        return fiber_size_check(graph, r)

    top = min(graph.n, graph.num_edges)
    return [_sweep(context, "fibers", [lambda r=r: run(r) for r in range(top + 1)])]


def _max_matchings(context: CheckContext) -> List[CheckReport]:
    def run() -> CheckReport:
        _require_small(context.graph, "max-matchings")
        return tree_unicyclic_max_matching_check(context.graph)

    return [_guarded(context, "max-matchings", run)]


def _q_duality(context: CheckContext) -> List[CheckReport]:
    return [
        _guarded(
            context,
            f"q-duality[{direction}]",
            lambda direction=direction: q_duality(context.graph, direction),
        )
        for direction in Q_DIRECTIONS
    ]


def _a_duality(context: CheckContext) -> List[CheckReport]:
    return [
        _guarded(
            context,
            f"a-duality[{direction}]",
            lambda direction=direction: adjacency_duality(context.graph, direction),
        )
        for direction in ADJACENCY_DIRECTIONS
    ]


def _forest(context: CheckContext) -> List[CheckReport]:
    return [
        _guarded(context, "forest", lambda: forest_characterization(context.graph))
    ]


def _interlacing(context: CheckContext) -> List[CheckReport]:
    graph, tol = context.graph, context.tol
    cases = [
        lambda h=h, v=v: vertex_interlacing_check(graph, h, v, tol)
        for h in context.kept_sets()
        for v in context.vertices(h)
    ]
    return [_sweep(context, "interlacing", cases)]


def _matching_interlacing(context: CheckContext) -> List[CheckReport]:
    graph, tol = context.graph, context.tol
    cases = [
        lambda v=v: matching_interlacing_check(graph, v, tol)
        for v in context.vertices(range(graph.n))
    ]
    return [_sweep(context, "matching-interlacing", cases)]


def _majorization(context: CheckContext) -> List[CheckReport]:
    return [
        _guarded(
            context,
            "majorization",
            lambda: degree_majorization_check(context.graph, context.tol, trace=True),
        )
    ]


def _grone(context: CheckContext) -> List[CheckReport]:
    return [
        _guarded(
            context, "grone", lambda: grone_sequence_check(context.graph, context.tol)
        )
    ]


def _bounds(context: CheckContext) -> List[CheckReport]:
    graph, tol = context.graph, context.tol
    bounds: List[Tuple[str, Callable[[Graph, float], CheckReport]]] = [
        ("spectral-bound", spectral_bound_check),
        ("degree-sum-bound", degree_sum_bound_check),
        ("min-root-bound", min_root_bound_check),
        ("interval", hl_interval_check),
    ]
    return [
        _guarded(context, name, lambda check=check: check(graph, tol))
        for name, check in bounds
    ]


def _zero_sum(context: CheckContext) -> List[CheckReport]:
    graph = context.graph
    return [
        _sweep(
            context,
            "zero-sum",
            [
                lambda h=h: principal_zero_sum_check(graph, h)
                for h in context.kept_sets()
            ],
        )
    ]


CHECKS: Dict[str, CheckRunner] = {
    "subdivision": _subdivision,
    "spectra": _spectra,
    "coefficients": _coefficients,
    "tu": _tu,
    "fibers": _fibers,
    "max-matchings": _max_matchings,
    "q-duality": _q_duality,
    "a-duality": _a_duality,
    "forest": _forest,
    "interlacing": _interlacing,
    "matching-interlacing": _matching_interlacing,
    "majorization": _majorization,
    "grone": _grone,
    "bounds": _bounds,
    "zero-sum": _zero_sum,
}

CHECK_NAMES = tuple(CHECKS)


def expand_names(names: Iterable[str]) -> List[str]:
    """
    Resolve check names, expanding `all` and dropping repeats.

    Args:
        names: Names from `CHECK_NAMES`, or `all`.

    Returns:
        The names to run, in first-mention order.

    Raises:
        BadParameter: If a name is unknown.
    """
    resolved: List[str] = []
    for name in names:
        expanded = CHECK_NAMES if name == "all" else (name,)
        for item in expanded:
            if item not in CHECKS:
                raise BadParameter(
                    f"Unknown check {item!r}; expected one of "
                    f"{', '.join(CHECK_NAMES)} or all."
                )
            if item not in resolved:
                resolved.append(item)
    return resolved


def run_checks(context: CheckContext, names: Iterable[str]) -> List[CheckReport]:
    """
    Run the named checks on one graph.

    Preconditions that do not hold become skipped reports; verification errors
    raised while computing become failed reports.

    Args:
        context: The graph and shared options.
        names: The check names; `all` expands to every check.

    Returns:
        The reports, in run order.
    """
    reports: List[CheckReport] = []
    for name in expand_names(names):
        reports.extend(CHECKS[name](context))
    return reports
