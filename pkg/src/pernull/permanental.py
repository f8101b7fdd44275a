"""Exact permanents and the permanental polynomial, two independent ways.

The polynomial per(xI - A(G)) is computed both by Ryser evaluation plus
exact interpolation and by direct enumeration of edge/cycle-disjoint-union
subgraphs. The two routes share no code past the adjacency masks, so each
serves as the other's oracle; the verification harness diffs them. Nullity
here means the number of trailing zero coefficients, read off either
polynomial or (equivalently, since all summands of a coefficient share one
sign) from the largest vertex count over those subgraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _kernels
from .errors import InvariantViolationError, ScaleLimitError
from .graphs import CycleInfo, Graph, VertexSet
from .limits import INTERP_MAX_N, RYSER_MAX_SIDE, SACHS_MAX_N


def permanent(matrix: Sequence[Sequence[int]]) -> int:
    """Exact permanent of a square integer matrix; the 0x0 matrix gives 1.

    Ryser's inclusion-exclusion over column subsets with Gray-code updates,
    so 2^n subset steps each costing O(n). Guarded at side 24.
    """
    n = len(matrix)
    rows = [list(r) for r in matrix]
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix must be square")
    if n > RYSER_MAX_SIDE:
        raise ScaleLimitError(f"permanent capped at side {RYSER_MAX_SIDE}")
    return _kernels.ryser_permanent(rows, n)


@dataclass(frozen=True)
class PermPolynomial:
    """Coefficients of per(xI - A): ``coeffs[k]`` multiplies x^(n-k).

    Always monic with zero linear-term head (no subgraph covers exactly one
    vertex), and coefficient k carries sign (-1)^k or vanishes.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = self.coeffs
        if not c or c[0] != 1:
            raise InvariantViolationError("polynomial must be monic")
        if len(c) > 1 and c[1] != 0:
            raise InvariantViolationError("coefficient 1 must vanish")
        for k, v in enumerate(c):
            if (-1) ** k * v < 0:
                raise InvariantViolationError(
                    f"coefficient {k} breaks the alternating sign pattern"
                )

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def nullity(self) -> int:
        """Multiplicity of the zero root: trailing zero coefficients."""
        for k in range(self.n, -1, -1):
            if self.coeffs[k]:
                return self.n - k
        raise InvariantViolationError("zero polynomial cannot occur")

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc


def _check_interp_guard(n: int, unsafe_override_guards: bool) -> None:
    if n > RYSER_MAX_SIDE:
        raise ScaleLimitError(
            f"interpolation needs one permanent per node; impossible past "
            f"side {RYSER_MAX_SIDE}"
        )
    if n > INTERP_MAX_N and not unsafe_override_guards:
        raise ScaleLimitError(
            f"interpolation capped at {INTERP_MAX_N} vertices "
            f"(override to accept the exponential cost)"
        )


def perm_polynomial_interpolation(
    g: Graph, *, unsafe_override_guards: bool = False
) -> PermPolynomial:
    """The polynomial via n+1 Ryser evaluations and exact interpolation.

    Evaluates per(xI - A) at x = 0..n, then solves the Vandermonde system
    by Gaussian elimination over rationals. No floating point; a fractional
    coefficient surviving elimination would mean a broken evaluation and
    raises.
    """
    n = g.n
    _check_interp_guard(n, unsafe_override_guards)
    values = []
    for x in range(n + 1):
        rows = [
            [x if i == j else -((g.masks[i] >> j) & 1) for j in range(n)]
            for i in range(n)
        ]
        values.append(_kernels.ryser_permanent(rows, n))
    # row i: sum_j x_i^j a_j = p(x_i), unknowns a_j = coefficient of x^j
    mat = [
        [Fraction(x**j) for j in range(n + 1)] + [Fraction(values[x])]
        for x in range(n + 1)
    ]
    for col in range(n + 1):
        pivot = next(r for r in range(col, n + 1) if mat[r][col])
        mat[col], mat[pivot] = mat[pivot], mat[col]
        inv = 1 / mat[col][col]
        mat[col] = [v * inv for v in mat[col]]
        for r in range(n + 1):
            if r != col and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[col])]
    monomial = [mat[j][n + 1] for j in range(n + 1)]
    if any(a.denominator != 1 for a in monomial):
        raise InvariantViolationError("interpolation produced non-integers")
    return PermPolynomial(tuple(int(monomial[n - k]) for k in range(n + 1)))


def _check_sachs_guard(n: int, unsafe_override_guards: bool) -> None:
    if n > SACHS_MAX_N and not unsafe_override_guards:
        raise ScaleLimitError(
            f"subgraph enumeration capped at {SACHS_MAX_N} vertices "
            f"(override to accept the exponential cost)"
        )


def perm_polynomial_sachs(
    g: Graph, *, unsafe_override_guards: bool = False
) -> PermPolynomial:
    """The polynomial via direct subgraph enumeration.

    Coefficient k sums 2^(number of cycles) over all spanning-free unions of
    disjoint single edges and cycles covering exactly k vertices, signed
    (-1)^k. Components are generated in increasing order of their minimum
    vertex; cycles are rooted at their minimum vertex and kept in one
    orientation only, so nothing is counted twice.
    """
    _check_sachs_guard(g.n, unsafe_override_guards)
    counts = _kernels.sachs_counts(g.masks, g.n)
    return PermPolynomial(
        tuple(c if k % 2 == 0 else -c for k, c in enumerate(counts))
    )


def per_nullity_oracle(
    g: Graph,
    *,
    method: str = "sachs",
    unsafe_override_guards: bool = False,
) -> int:
    """Nullity straight from the polynomial; brute force, trusts no theory.

    ``method`` picks which of the two polynomial routes backs the answer.
    Componentwise additive by construction, and n exactly for edgeless
    graphs (the polynomial is then x^n).
    """
    if method == "sachs":
        poly = perm_polynomial_sachs(
            g, unsafe_override_guards=unsafe_override_guards
        )
    elif method in ("interp", "interpolation"):
        poly = perm_polynomial_interpolation(
            g, unsafe_override_guards=unsafe_override_guards
        )
    else:
        raise ValueError(f"unknown method {method!r}")
    return poly.nullity()


@dataclass(frozen=True)
class SachsSubgraph:
    """A vertex-disjoint union of single edges and cycles."""

    covered: VertexSet
    edges: tuple[tuple[int, int], ...]
    cycles: tuple[CycleInfo, ...]

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    @property
    def order(self) -> int:
        return len(self.covered)


def max_sachs_subgraph(
    g: Graph, *, unsafe_override_guards: bool = False
) -> SachsSubgraph:
    """A maximum-order edge/cycle union, with the components as witness.

    The order is found by branch and bound (prune: covered so far plus
    everything still uncoverable cannot beat the best); the witness is the
    first subgraph of that order in the deterministic enumeration order.
    ``n - order`` equals the oracle nullity -- no cancellation can hide a
    top coefficient.
    """
    _check_sachs_guard(g.n, unsafe_override_guards)
    n = g.n
    masks = g.masks
    target = _kernels.max_sachs_order(masks, n)
    edges: list[tuple[int, int]] = []
    cycles: list[tuple[int, ...]] = []

    def close_or_extend(v, above, uncovered, k, cur, visited, length, first, path):
        rem = masks[cur] & above & ~visited
        while rem:
            low = rem & -rem
            w = low.bit_length() - 1
            rem ^= low
            nvis = visited | low
            if length >= 2 and (masks[w] >> v) & 1 and first < w:
                cycles.append((v, *path, w))
                if place(v + 1, uncovered & ~nvis, k + length + 1):
                    return True
                cycles.pop()
            if close_or_extend(v, above, uncovered, k, w, nvis, length + 1,
                               w if length == 1 else first, path + [w]):
                return True
        return False

    def place(start, uncovered, k):
        if k == target:
            return True
        cand = uncovered >> start << start
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            rest = uncovered >> v << v
            if k + rest.bit_count() < target:
                break
            above = uncovered >> (v + 1) << (v + 1)
            ew = masks[v] & above
            while ew:
                lw = ew & -ew
                w = lw.bit_length() - 1
                ew ^= lw
                edges.append((v, w))
                if place(v + 1, uncovered & ~low & ~lw, k + 2):
                    return True
                edges.pop()
            if close_or_extend(v, above, uncovered, k, v, low, 1, n, []):
                return True
        return False

    if not place(0, (1 << n) - 1, 0):
        raise InvariantViolationError("witness search missed the known optimum")
    covered = 0
    for u, w in edges:
        covered |= (1 << u) | (1 << w)
    for cyc in cycles:
        for u in cyc:
            covered |= 1 << u
    if covered.bit_count() != target:
        raise InvariantViolationError("witness does not match the optimum order")
    return SachsSubgraph(
        covered=VertexSet.from_mask(covered, n),
        edges=tuple(edges),
        cycles=tuple(CycleInfo.from_vertices(c) for c in cycles),
    )
