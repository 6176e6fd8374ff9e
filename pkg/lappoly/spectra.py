"""Exact integer matrices of a graph and their characteristic polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Type

from lappoly.exceptions import NotSquare, NotSymmetric
from lappoly.graphs import Graph, induced_delete, subdivision
from lappoly.polynomials import IntPoly, RootList, real_roots, substitute_square
from lappoly.utils.config import ROOT_TOL
from lappoly.utils.report import IdentityReport


@dataclass(frozen=True)
class IntMatrix:
    """A dense matrix of arbitrary-precision integers, stored row by row."""

    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_lists(cls: Type[IntMatrix], rows: Iterable[Iterable[int]]) -> IntMatrix:
        """
        Build a matrix from nested iterables.

        Args:
            rows: The rows.

        Returns:
            The matrix.
        """
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def shape(self: IntMatrix) -> Tuple[int, int]:
        """
        The (rows, columns) pair.

        Returns:
            The shape.
        """
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    @property
    def order(self: IntMatrix) -> int:
        """
        The order of a square matrix.

        Returns:
            The number of rows.

        Raises:
            NotSquare: If the matrix is not square.
        """
        num_rows, num_cols = self.shape
        if self.rows and num_rows != num_cols:
            raise NotSquare(f"Matrix of shape {self.shape} is not square.")
        return num_rows

    def is_symmetric(self: IntMatrix) -> bool:
        """
        Whether the matrix equals its transpose.

        Returns:
            True if symmetric.
        """
        return self == self.transpose()

    def transpose(self: IntMatrix) -> IntMatrix:
        """
        The transpose.

        Returns:
            Mᵀ.
        """
        return IntMatrix(tuple(zip(*self.rows)))

    def __matmul__(self: IntMatrix, other: IntMatrix) -> IntMatrix:
        """
        The matrix product.

        Args:
            other: The right factor.

        Returns:
            self · other.
        """
        columns = list(zip(*other.rows))
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in columns)
                for row in self.rows
            )
        )

    def gram(self: IntMatrix) -> IntMatrix:
        """
        The Gram matrix of the rows, M·Mᵀ.

        Returns:
            M·Mᵀ, square of order equal to the row count.
        """
        num_rows, num_cols = self.shape
        if num_cols == 0:
            return IntMatrix(tuple((0,) * num_rows for _ in range(num_rows)))
        return self @ self.transpose()

    def principal_submatrix(self: IntMatrix, keep: Sequence[int]) -> IntMatrix:
        """
        The submatrix on the given rows and the same columns.

        Args:
            keep: The indices to keep, in order.

        Returns:
            M restricted to keep × keep.
        """
        return IntMatrix(tuple(tuple(self.rows[i][j] for j in keep) for i in keep))


def _fraction_product(
    a: List[List[Fraction]], b: List[List[Fraction]]
) -> List[List[Fraction]]:
    n = len(a)
    return [
        [sum((a[i][t] * b[t][j] for t in range(n)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def _square(n: int, entry: Dict[Tuple[int, int], int]) -> IntMatrix:
    return IntMatrix(
        tuple(tuple(entry.get((i, j), 0) for j in range(n)) for i in range(n))
    )


def adjacency(graph: Graph) -> IntMatrix:
    """
    The adjacency matrix A(G).

    Args:
        graph: The graph G.

    Returns:
        A(G).
    """
    entry: Dict[Tuple[int, int], int] = {}
    for u, v in graph.edges:
        entry[(u, v)] = entry[(v, u)] = 1
    return _square(graph.n, entry)


def _degree_plus(graph: Graph, sign: int) -> IntMatrix:
    entry = {(v, v): d for v, d in enumerate(graph.degrees)}
    for u, v in graph.edges:
        entry[(u, v)] = entry[(v, u)] = sign
    return _square(graph.n, entry)


def laplacian(graph: Graph) -> IntMatrix:
    """
    The Laplacian matrix L(G) = D(G) - A(G).

    Args:
        graph: The graph G.

    Returns:
        L(G).
    """
    return _degree_plus(graph, -1)


def signless_laplacian(graph: Graph) -> IntMatrix:
    """
    The signless Laplacian matrix Q(G) = D(G) + A(G).

    Args:
        graph: The graph G.

    Returns:
        Q(G).
    """
    return _degree_plus(graph, 1)


def incidence(graph: Graph) -> IntMatrix:
    """
    The vertex-edge incidence matrix B_G, rows indexed by vertices.

    Args:
        graph: The graph G.

    Returns:
        B_G with B·Bᵀ = Q(G).
    """
    return IntMatrix(
        tuple(
            tuple(1 if v in edge else 0 for edge in graph.edges)
            for v in range(graph.n)
        )
    )


def char_poly(matrix: IntMatrix) -> IntPoly:
    """
    Compute det(xI - M) with the Faddeev–LeVerrier recurrence.

    B_0 = I, c_k = -tr(M B_(k-1)) / k and B_k = M B_(k-1) + c_k I give
    det(xI - M) = x^n + c_1 x^(n-1) + ... + c_n. Every division is exact.

    Args:
        matrix: A square integer matrix.

    Returns:
        The monic characteristic polynomial.

    Raises:
        NotSquare: If the matrix is not square.
    """
    n = matrix.order
    a = [[Fraction(x) for x in row] for row in matrix.rows]
    b: List[List[Fraction]] = [
        [Fraction(int(i == j)) for j in range(n)] for i in range(n)
    ]
    descending = [Fraction(1)]
    for k in range(1, n + 1):
        ab = _fraction_product(a, b)
        c_k = -sum((ab[i][i] for i in range(n)), Fraction(0)) / k
        for i in range(n):
            ab[i][i] += c_k
        b = ab
        descending.append(c_k)
    return IntPoly.from_descending(descending)


def principal_char_poly(graph: Graph, deleted: Iterable[int]) -> IntPoly:
    """
    Compute φ(Q(G)_[G - W], x) for the principal submatrix of Q(G) off W.

    Diagonal entries stay d_G(v); they are not recomputed on G - W.

    Args:
        graph: The graph G.
        deleted: The vertex set W.

    Returns:
        The characteristic polynomial of the principal submatrix.
    """
    removed = graph.check_vertices(deleted)
    keep = [v for v in range(graph.n) if v not in removed]
    return char_poly(signless_laplacian(graph).principal_submatrix(keep))


def spectrum(matrix: IntMatrix, tol: float = ROOT_TOL) -> RootList:
    """
    The certified eigenvalues of a symmetric integer matrix.

    Args:
        matrix: The matrix.
        tol: The isolation width.

    Returns:
        The eigenvalues, nonincreasing, with multiplicities.

    Raises:
        NotSymmetric: If the matrix is not symmetric.
    """
    if not matrix.is_symmetric():
        raise NotSymmetric(f"Matrix of shape {matrix.shape} is not symmetric.")
    return real_roots(char_poly(matrix), tol)


def spectral_radius(graph: Graph) -> float:
    """
    The largest eigenvalue ρ(Q(G)) of the signless Laplacian.

    Args:
        graph: The graph G.

    Returns:
        ρ(Q(G)); 0.0 for the null graph.
    """
    if graph.n == 0:
        return 0.0
    largest = spectrum(signless_laplacian(graph)).largest
    return largest if largest is not None else 0.0


def subdivision_spectra_check(
    graph: Graph, deleted: Iterable[int] = ()
) -> IdentityReport:
    """
    Check φ(A(S_G - W), x) = x^(m - n + |W|) φ(Q(G)_[G - W], x^2).

    A negative exponent moves the monomial to the left-hand side. The report also
    confirms that B·Bᵀ restricted to V(G) - W is the principal submatrix of Q(G).

    Args:
        graph: The graph G.
        deleted: The vertex set W.

    Returns:
        The identity report.
    """
    removed = graph.check_vertices(deleted)
    keep = [v for v in range(graph.n) if v not in removed]
    reduced = induced_delete(subdivision(graph).graph, removed).graph
    left = char_poly(adjacency(reduced))
    right = substitute_square(principal_char_poly(graph, removed))
    exponent = graph.num_edges - graph.n + len(removed)
    if exponent >= 0:
        right = right.shift(exponent)
    else:
        left = left.shift(-exponent)

    gram = incidence(graph).gram().principal_submatrix(keep)
    gram_ok = gram == signless_laplacian(graph).principal_submatrix(keep)
    report = IdentityReport.compare(
        "subdivision-spectra",
        left,
        right,
        {"deleted": sorted(removed), "exponent": exponent, "incidence_gram": gram_ok},
    )
    report.passed = report.passed and gram_ok
    return report
