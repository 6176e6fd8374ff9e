"""Interlacing and majorization of zero sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from lappoly.exceptions import (
    BadParameter,
    DegreeMismatch,
    LengthMismatch,
    MinDegreeNotOne,
    NotConnected,
    VertexNotInH,
)
from lappoly.graphs import Graph, degree_sequence, induced_delete
from lappoly.matchings import (
    laplacian_matching_polynomial,
    matching_polynomial,
    principal_beta,
)
from lappoly.polynomials import RootList, real_roots
from lappoly.spectra import laplacian, spectrum
from lappoly.utils.config import DEFAULT_TOL
from lappoly.utils.report import CheckReport

Number = Union[int, float]
MAJORIZATION_MODES = ("weak", "full")


def _ascending(roots: Union[RootList, Sequence[Number]]) -> List[float]:
    values = roots.expanded() if isinstance(roots, RootList) else roots
    return sorted(float(v) for v in values)


def interlaces(
    f_roots: Union[RootList, Sequence[Number]],
    g_roots: Union[RootList, Sequence[Number]],
    tol: float = DEFAULT_TOL,
) -> bool:
    """
    Whether the zeros of f interlace those of g.

    With g's zeros b_1 <= ... <= b_n and f's zeros a_1 <= ... <= a_(n-1), the
    chain b_1 <= a_1 <= b_2 <= ... <= a_(n-1) <= b_n must hold up to tol.
    Multiple roots are expanded before the comparison.

    Args:
        f_roots: The zeros of f, degree n - 1.
        g_roots: The zeros of g, degree n.
        tol: The slack allowed in every inequality.

    Returns:
        True if the chain holds.

    Raises:
        DegreeMismatch: If f does not have exactly one zero fewer than g.
    """
    a, b = _ascending(f_roots), _ascending(g_roots)
    if len(a) != len(b) - 1:
        raise DegreeMismatch(
            f"Cannot interlace {len(a)} zeros with {len(b)} zeros.",
            {"f_degree": len(a), "g_degree": len(b)},
        )
    return all(b[i] <= a[i] + tol and a[i] <= b[i + 1] + tol for i in range(len(a)))


def vertex_interlacing_check(
    graph: Graph, vertices: Iterable[int], v: int, tol: float = DEFAULT_TOL
) -> CheckReport:
    """
    Check that β(G, x)_[H - v] interlaces β(G, x)_[H].

    When G[H] is connected, the largest zero of β(G, x)_[H] must also be simple
    and exceed the largest zero of β(G, x)_[H - v] by more than tol.

    Args:
        graph: The graph G.
        vertices: The vertex set H.
        v: A vertex of H.
        tol: The comparison tolerance.

    Returns:
        The interlacing verdict and, for connected G[H], the largest-zero gap.

    Raises:
        VertexNotInH: If v is not in H.
    """
    keep = graph.check_vertices(vertices)
    if v not in keep:
        raise VertexNotInH(f"Vertex {v} is not in H = {sorted(keep)}.")
    outer = real_roots(principal_beta(graph, keep))
    inner = real_roots(principal_beta(graph, keep - {v}))
    passed = interlaces(inner, outer, tol)
    details: Dict[str, Any] = {
        "H": sorted(keep),
        "v": v,
        "interlaces": passed,
    }

    induced = induced_delete(graph, set(range(graph.n)) - keep).graph
    if induced.is_connected():
        top = outer.roots[0]
        simple = top.multiplicity == 1
        gap = top.value - inner.largest if inner.largest is not None else None
        strict = simple and (gap is None or gap > tol)
        details.update({"largest_simple": simple, "largest_gap": gap})
        passed = passed and strict
    return CheckReport(f"interlacing[v={v}]", passed=passed, details=details)


@dataclass(frozen=True)
class MajorizationVerdict:
    """Prefix-sum comparison of two sequences sorted nonincreasing."""

    weak: bool
    full: bool
    first_failure: Optional[int]
    y_prefix: Tuple[float, ...]
    x_prefix: Tuple[float, ...]
    mode: str = "full"

    @property
    def holds(self: MajorizationVerdict) -> bool:
        """
        The verdict in the requested mode.

        Returns:
            `full` in full mode, `weak` in weak mode.
        """
        return self.full if self.mode == "full" else self.weak

    def to_dict(self: MajorizationVerdict) -> Dict[str, Any]:
        """
        The JSON form.

        Returns:
            The verdict as a dictionary.
        """
        return {
            "weak": self.weak,
            "full": self.full,
            "first_failure": self.first_failure,
            "y_prefix": list(self.y_prefix),
            "x_prefix": list(self.x_prefix),
        }


def majorizes(
    y: Sequence[Number], x: Sequence[Number], mode: str = "full", tol: float = 0.0
) -> MajorizationVerdict:
    """
    Decide whether y (weakly) majorizes x.

    Both sequences are sorted nonincreasing. y weakly majorizes x when every
    prefix sum of y is at least the matching prefix sum of x; it majorizes x
    when in addition the totals are equal.

    Args:
        y: The majorizing candidate.
        x: The majorized candidate.
        mode: "weak" or "full"; selects what `holds` reports.
        tol: The slack allowed in every prefix comparison.

    Returns:
        Both verdicts, the first failing prefix length (1-based) and the prefix
        sums.

    Raises:
        LengthMismatch: If the sequences differ in length.
        BadParameter: If the mode is unknown.
    """
    if len(y) != len(x):
        raise LengthMismatch(f"Cannot compare lengths {len(y)} and {len(x)}.")
    if mode not in MAJORIZATION_MODES:
        raise BadParameter(f"Unknown majorization mode {mode!r}.")
    y_prefix: List[float] = []
    x_prefix: List[float] = []
    y_total = x_total = 0.0
    for a, b in zip(sorted(y, reverse=True), sorted(x, reverse=True)):
        y_total += a
        x_total += b
        y_prefix.append(y_total)
        x_prefix.append(x_total)
    first_failure = next(
        (k + 1 for k, (a, b) in enumerate(zip(y_prefix, x_prefix)) if a < b - tol),
        None,
    )
    weak = first_failure is None
    full = weak and abs(y_total - x_total) <= tol
    return MajorizationVerdict(
        weak, full, first_failure, tuple(y_prefix), tuple(x_prefix), mode
    )


def degree_majorization_check(
    graph: Graph, tol: float = DEFAULT_TOL, trace: bool = False
) -> CheckReport:
    """
    Check that the zero sequence of β(G, x) majorizes the degree sequence.

    Prefix legs compare certified root values within tol. The total leg is exact:
    the negated x^(n-1) coefficient of β must equal 2|E(G)|. With `trace`, the
    same claim is checked for every H_i induced by the i vertices of largest
    degree.

    Args:
        graph: The graph G.
        tol: The prefix comparison tolerance.
        trace: Also check every prefix-induced H_i.

    Returns:
        The verdict, with one entry per H_i in trace mode.
    """
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    sizes = range(1, graph.n + 1) if trace else [graph.n]
    steps = []
    passed = True
    for i in sizes:
        prefix = order[:i]
        beta = principal_beta(graph, prefix)
        degrees = [graph.degree(v) for v in prefix]
        verdict = majorizes(real_roots(beta).expanded(), degrees, "weak", tol)
        exact_total = -beta.coeff(beta.degree - 1) == sum(degrees)
        ok = verdict.weak and exact_total
        passed = passed and ok
        steps.append({"i": i, "passed": ok, **verdict.to_dict()})
    details: Dict[str, Any] = {"degree_sequence": list(degree_sequence(graph))}
    if trace:
        details["trace"] = steps
    elif steps:
        details.update(steps[-1])
    return CheckReport("majorization", passed=passed, details=details)


def grone_sequence_check(graph: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    """
    Check that the zeros of β(G, x) majorize d̂(G) iff G is a tree.

    d̂(G) = (d_1 + 1, d_2, ..., d_(n-1), d_n - 1) for the nonincreasing degree
    sequence. The Laplacian spectrum always majorizes d̂(G); that leg is checked
    as well.

    Args:
        graph: A connected graph with n >= 2 and minimum degree 1.
        tol: The comparison tolerance.

    Returns:
        Both verdicts and the tree flag.

    Raises:
        NotConnected: If G is not connected.
        MinDegreeNotOne: If n < 2 or δ(G) != 1.
    """
    if not graph.is_connected():
        raise NotConnected("grone needs a connected graph.", {"check": "grone"})
    if graph.n < 2 or graph.min_degree != 1:
        raise MinDegreeNotOne(
            f"grone needs minimum degree 1, got {graph.min_degree}.",
            {"check": "grone"},
        )
    degrees = list(degree_sequence(graph))
    d_hat = [degrees[0] + 1] + degrees[1:-1] + [degrees[-1] - 1]
    beta_zeros = real_roots(laplacian_matching_polynomial(graph)).expanded()
    eigenvalues = spectrum(laplacian(graph)).expanded()
    beta_verdict = majorizes(beta_zeros, d_hat, "full", tol)
    laplacian_verdict = majorizes(eigenvalues, d_hat, "full", tol)
    tree = graph.is_tree()
    return CheckReport(
        "grone",
        passed=beta_verdict.full == tree and laplacian_verdict.full,
        details={
            "d_hat": d_hat,
            "tree": tree,
            "beta": beta_verdict.to_dict(),
            "laplacian": laplacian_verdict.to_dict(),
        },
    )


def principal_zero_sum_check(graph: Graph, vertices: Iterable[int]) -> CheckReport:
    """
    Check that the zeros of β(G, x)_[H] sum to Σ_{v in H} d_G(v), exactly.

    Reads the sum off the x^(|H|-1) coefficient; no roots are extracted.

    Args:
        graph: The graph G.
        vertices: The vertex set H.

    Returns:
        Both sums.
    """
    keep = graph.check_vertices(vertices)
    beta = principal_beta(graph, keep)
    zero_sum = -beta.coeff(len(keep) - 1) if keep else 0
    degree_sum = sum(graph.degree(v) for v in keep)
    return CheckReport(
        "zero-sum",
        passed=zero_sum == degree_sum,
        details={"H": sorted(keep), "zero_sum": zero_sum, "degree_sum": degree_sum},
    )


def matching_interlacing_check(
    graph: Graph, v: int, tol: float = DEFAULT_TOL
) -> CheckReport:
    """
    Check that the zeros of α(G - v, x) interlace those of α(G, x).

    For connected G the largest zero of α(G, x) must also be simple and exceed
    the largest zero of α(G - v, x) by more than tol.

    Args:
        graph: The graph G.
        v: The deleted vertex.
        tol: The comparison tolerance.

    Returns:
        The interlacing verdict and the largest-zero gap.
    """
    graph.check_vertices([v])
    outer = real_roots(matching_polynomial(graph))
    inner = real_roots(matching_polynomial(induced_delete(graph, {v}).graph))
    passed = interlaces(inner, outer, tol)
    details: Dict[str, Any] = {"v": v, "interlaces": passed}
    if graph.is_connected():
        top = outer.roots[0]
        gap = top.value - inner.largest if inner.largest is not None else None
        strict = top.multiplicity == 1 and (gap is None or gap > tol)
        details.update({"largest_simple": top.multiplicity == 1, "largest_gap": gap})
        passed = passed and strict
    return CheckReport(f"matching-interlacing[v={v}]", passed=passed, details=details)
