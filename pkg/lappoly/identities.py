"""
Verifiers for the exact polynomial identities and the root bounds.

Exact identities return an IdentityReport whose residual must vanish. Root bounds
compare certified root values with tolerance `tol`; their equality flags use the
same tolerance and must agree with the structural predicate that characterizes
the equality case.
"""

from __future__ import annotations

import math
from typing import Any, Dict, Iterable

from lappoly.exceptions import BadParameter, MaxDegreeTooSmall, NoEdges, NotConnected
from lappoly.graphs import Graph, enumerate_two_regular, induced_delete
from lappoly.matchings import (
    beta_via_subdivision,
    laplacian_matching_polynomial,
    matching_polynomial,
    principal_beta,
)
from lappoly.polynomials import DensePoly, IntPoly, real_roots
from lappoly.spectra import (
    adjacency,
    char_poly,
    laplacian,
    principal_char_poly,
    signless_laplacian,
    spectral_radius,
)
from lappoly.utils.config import DEFAULT_TOL
from lappoly.utils.report import CheckReport, IdentityReport

ADJACENCY_DIRECTIONS = ("phi_from_alpha", "alpha_from_phi")
Q_DIRECTIONS = ("phi_from_beta", "beta_from_phi")


def _require_connected(graph: Graph, name: str) -> None:
    if not graph.is_connected():
        raise NotConnected(f"{name} needs a connected graph.", {"check": name})


def subdivision_identity_check(
    graph: Graph, deleted: Iterable[int] = ()
) -> IdentityReport:
    """
    Compare the subdivision route for β(G, x)_[G - W] with direct summation.

    Args:
        graph: The graph G.
        deleted: The vertex set W.

    Returns:
        The identity report, left from S_G - W and right by direct summation.
    """
    removed = graph.check_vertices(deleted)
    keep = set(range(graph.n)) - removed
    return IdentityReport.compare(
        "subdivision",
        beta_via_subdivision(graph, removed),
        principal_beta(graph, keep),
        {"deleted": sorted(removed)},
    )


def adjacency_duality(graph: Graph, direction: str) -> IdentityReport:
    """
    Check the duality between φ(A(G), x) and α(G, x) over 2-regular subgraphs.

    `phi_from_alpha`: φ(A(G)) = α(G) + Σ_C (-2)^ω(C) α(G - C).
    `alpha_from_phi`: α(G) = φ(A(G)) + Σ_C 2^ω(C) φ(A(G - C)).

    Args:
        graph: The graph G.
        direction: One of ADJACENCY_DIRECTIONS.

    Returns:
        The identity report.

    Raises:
        BadParameter: If the direction is unknown.
    """
    if direction not in ADJACENCY_DIRECTIONS:
        raise BadParameter(f"Unknown direction {direction!r}.")
    cycles = enumerate_two_regular(graph)
    if direction == "phi_from_alpha":
        left: DensePoly = char_poly(adjacency(graph))
        right: DensePoly = matching_polynomial(graph)
        for c in cycles:
            rest = induced_delete(graph, c.vertices).graph
            right = right + matching_polynomial(rest).scale((-2) ** c.omega)
    else:
        left = matching_polynomial(graph)
        right = char_poly(adjacency(graph))
        for c in cycles:
            rest = induced_delete(graph, c.vertices).graph
            right = right + char_poly(adjacency(rest)).scale(2**c.omega)
    return IdentityReport.compare(
        f"a-duality[{direction}]", left, right, {"two_regular": len(cycles)}
    )


def q_duality(graph: Graph, direction: str) -> IdentityReport:
    """
    Check the duality between φ(Q(G), x) and β(G, x) over 2-regular subgraphs.

    `phi_from_beta`: φ(Q(G)) = β(G) + Σ_C (-2)^ω(C) β(G)_[G - C].
    `beta_from_phi`: β(G) = φ(Q(G)) + Σ_C 2^ω(C) φ(Q(G)_[G - C]).

    Both principal terms keep the degrees of G.

    Args:
        graph: The graph G.
        direction: One of Q_DIRECTIONS.

    Returns:
        The identity report.

    Raises:
        BadParameter: If the direction is unknown.
    """
    if direction not in Q_DIRECTIONS:
        raise BadParameter(f"Unknown direction {direction!r}.")
    cycles = enumerate_two_regular(graph)
    everything = set(range(graph.n))
    if direction == "phi_from_beta":
        left: DensePoly = char_poly(signless_laplacian(graph))
        right: DensePoly = laplacian_matching_polynomial(graph)
        for c in cycles:
            term = principal_beta(graph, everything - c.vertices)
            right = right + term.scale((-2) ** c.omega)
    else:
        left = laplacian_matching_polynomial(graph)
        right = char_poly(signless_laplacian(graph))
        for c in cycles:
            right = right + principal_char_poly(graph, c.vertices).scale(2**c.omega)
    return IdentityReport.compare(
        f"q-duality[{direction}]", left, right, {"two_regular": len(cycles)}
    )


def forest_characterization(graph: Graph) -> CheckReport:
    """
    Check that G is a forest iff β = φ(Q), iff β = φ(L), iff α = φ(A).

    Args:
        graph: The graph G.

    Returns:
        The three equalities and the forest flag; passes iff all agree.
    """
    beta = laplacian_matching_polynomial(graph)
    forest = graph.is_forest()
    equalities = {
        "beta==phiQ": beta == char_poly(signless_laplacian(graph)),
        "beta==phiL": beta == char_poly(laplacian(graph)),
        "alpha==phiA": matching_polynomial(graph) == char_poly(adjacency(graph)),
    }
    return CheckReport(
        "forest",
        passed=all(equal == forest for equal in equalities.values()),
        details={"forest": forest, **equalities},
    )


def _largest(poly: IntPoly) -> float:
    largest = real_roots(poly).largest
    return largest if largest is not None else 0.0


def spectral_bound_check(graph: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    """
    Check λ_max(β(G, x)) <= ρ(Q(G)), with equality iff G is a tree.

    Args:
        graph: A connected graph G.
        tol: The comparison tolerance.

    Returns:
        Both values, the equality flag and the tree flag.

    Raises:
        NotConnected: If G is not connected.
    """
    _require_connected(graph, "spectral-bound")
    lam = _largest(laplacian_matching_polynomial(graph))
    rho = spectral_radius(graph)
    equal = abs(lam - rho) <= tol
    tree = graph.is_tree()
    return CheckReport(
        "spectral-bound",
        passed=lam <= rho + tol and equal == tree,
        details={"lambda_max": lam, "rho_q": rho, "equal": equal, "tree": tree},
    )


def degree_sum_bound_check(graph: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    """
    Check λ_max(β(G, x)) <= max over edges uv of d(u) + d(v); equality iff a star.

    The same bound holds for ρ(Q(G)), with equality iff G is regular or
    bipartite semiregular; that leg is checked too.

    Args:
        graph: A connected graph G with at least one edge.
        tol: The comparison tolerance.

    Returns:
        The bound, both largest roots and the equality flags.

    Raises:
        NotConnected: If G is not connected.
        NoEdges: If G has no edges.
    """
    _require_connected(graph, "degree-sum-bound")
    if not graph.num_edges:
        raise NoEdges("degree-sum-bound needs at least one edge.")
    bound = max(graph.degree(u) + graph.degree(v) for u, v in graph.edges)
    lam = _largest(laplacian_matching_polynomial(graph))
    rho = spectral_radius(graph)
    beta_equal = abs(lam - bound) <= tol
    rho_equal = abs(rho - bound) <= tol
    star = graph.is_star()
    balanced = graph.is_regular() or graph.is_bipartite_semiregular()
    return CheckReport(
        "degree-sum-bound",
        passed=(
            lam <= bound + tol
            and beta_equal == star
            and rho <= bound + tol
            and rho_equal == balanced
        ),
        details={
            "bound": bound,
            "lambda_max": lam,
            "rho_q": rho,
            "equal": beta_equal,
            "star": star,
            "rho_equal": rho_equal,
            "regular_or_semiregular": balanced,
        },
    )


def min_root_bound_check(graph: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    """
    Check λ_min(β(G, x)) <= δ(G), with equality iff G has one vertex.

    For n >= 2 a witness edge {u, v} with d(u) = δ is reported as well: the
    principal polynomial on {u, v} is (x - δ)(x - d(v)) - 1, its smaller root is
    (2δ + a - √(a² + 4)) / 2 < δ with a = d(v) - δ, and λ_min(β) lies below it.

    Args:
        graph: A connected graph G.
        tol: The comparison tolerance.

    Returns:
        λ_min, δ, the equality flag and the witness data.

    Raises:
        NotConnected: If G is not connected.
    """
    _require_connected(graph, "min-root-bound")
    roots = real_roots(laplacian_matching_polynomial(graph))
    lam = roots.smallest if roots.smallest is not None else 0.0
    delta = graph.min_degree
    equal = abs(lam - delta) <= tol
    single = graph.n == 1
    passed = lam <= delta + tol and equal == single
    details: Dict[str, Any] = {
        "lambda_min": lam,
        "min_degree": delta,
        "equal": equal,
        "single_vertex": single,
    }
    if not single:
        u = graph.degrees.index(delta)
        v = min(graph.neighbors[u])
        a = graph.degree(v) - delta
        closed_form = (2 * delta + a - math.sqrt(a * a + 4)) / 2
        witness = real_roots(principal_beta(graph, {u, v})).smallest or 0.0
        witness_ok = (
            abs(witness - closed_form) <= tol
            and witness < delta - tol
            and lam <= witness + tol
        )
        details["witness"] = {
            "edge": [u, v],
            "closed_form": closed_form,
            "lambda_min": witness,
            "passed": witness_ok,
        }
        passed = passed and witness_ok
    return CheckReport("min-root-bound", passed=passed, details=details)


def hl_interval_check(graph: Graph, tol: float = DEFAULT_TOL) -> CheckReport:
    """
    Check that every root of β(G, x) lies in [0, Δ + 2√(Δ - 1)).

    Also checks that every root of α(G, x) lies in (-2√(Δ - 1), 2√(Δ - 1)).

    Args:
        graph: A graph with Δ(G) >= 2.
        tol: The comparison tolerance.

    Returns:
        The extreme roots and both intervals.

    Raises:
        MaxDegreeTooSmall: If Δ(G) < 2.
    """
    top = graph.max_degree
    if top < 2:
        raise MaxDegreeTooSmall(
            f"interval check needs Δ >= 2, got {top}.", {"check": "interval"}
        )
    radius = 2 * math.sqrt(top - 1)
    beta_roots = real_roots(laplacian_matching_polynomial(graph))
    alpha_roots = real_roots(matching_polynomial(graph))
    beta_low = beta_roots.smallest or 0.0
    beta_high = beta_roots.largest or 0.0
    alpha_high = max((abs(r) for r in alpha_roots.expanded()), default=0.0)
    beta_ok = beta_low >= -tol and beta_high < top + radius + tol
    alpha_ok = alpha_high < radius + tol
    return CheckReport(
        "interval",
        passed=beta_ok and alpha_ok,
        details={
            "beta_min": beta_low,
            "beta_max": beta_high,
            "beta_bound": top + radius,
            "alpha_abs_max": alpha_high,
            "alpha_bound": radius,
        },
    )
