"""Quantum determinants, quantum minors, and q-Laplace expansions.

The quantum determinant of a square grid is the signed permutation sum
sum_{sigma} (-q)^{inv(sigma)} X[1,sigma(1)] ... X[n,sigma(n)].  A minor keeps a
subset of rows and columns and takes the determinant of the relabeled
submatrix; because the row indices are strictly increasing, every permutation
product is already in PBW order, so minors are assembled without rewriting.

Row expansions carry the exponent law (-q)^(j-i), which reproduces both
hand-checkable small cases; column expansions use the law fitted by the
exponent solver and frozen in the shipped table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import AlgebraElement, PbwMonomial, Shape, gen
from .scalar import LaurentScalar

Gen = tuple[int, int]


@dataclass(frozen=True)
class MinorSpec:
    """Row and column index sets naming a quantum minor; strictly increasing, equal size."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.cols) or not self.rows:
            raise ValueError("minor needs equally many rows and columns, at least one each")
        if any(a >= b for a, b in zip(self.rows, self.rows[1:])):
            raise ValueError(f"row indices must be strictly increasing: {self.rows}")
        if any(a >= b for a, b in zip(self.cols, self.cols[1:])):
            raise ValueError(f"column indices must be strictly increasing: {self.cols}")

    @property
    def size(self) -> int:
        return len(self.rows)


def inversions(perm: tuple[int, ...]) -> int:
    """Number of inversions of a permutation given in one-line notation."""
    return sum(
        1
        for a, b in itertools.combinations(range(len(perm)), 2)
        if perm[a] > perm[b]
    )


def minor(shape: Shape, rows: tuple[int, ...] | list[int], cols: tuple[int, ...] | list[int]) -> AlgebraElement:
    """The quantum minor on the given rows and columns, in PBW normal form."""
    spec = MinorSpec(tuple(rows), tuple(cols))
    if spec.rows[-1] > shape.m or spec.cols[-1] > shape.n or spec.rows[0] < 1 or spec.cols[0] < 1:
        raise ValueError(f"minor {spec} does not fit in shape {shape}")
    t = spec.size
    terms: dict[PbwMonomial, LaurentScalar] = {}
    for perm in itertools.permutations(range(t)):
        # rows ascend, so the product below is already a PBW monomial
        word = tuple(((spec.rows[a], spec.cols[perm[a]]), 1) for a in range(t))
        terms[PbwMonomial(word)] = LaurentScalar.minus_q_power(inversions(perm))
    return AlgebraElement(shape, terms)


def qdet(shape: Shape) -> AlgebraElement:
    """Quantum determinant of the full grid; requires a square shape."""
    if shape.m != shape.n:
        raise ValueError(f"quantum determinant needs a square shape, got {shape}")
    return minor(shape, range(1, shape.n + 1), range(1, shape.n + 1))


def complement_minor(shape: Shape, i: int, j: int) -> AlgebraElement:
    """The minor A(i,j) deleting row i and column j of a square grid."""
    if shape.m != shape.n:
        raise ValueError("complement minors are defined for square shapes")
    n = shape.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"A({i},{j}) out of range for {shape}")
    if n == 1:
        return AlgebraElement.one(shape)
    rows = [r for r in range(1, n + 1) if r != i]
    cols = [c for c in range(1, n + 1) if c != j]
    return minor(shape, rows, cols)


def row_expansion_exponent(i: int, j: int) -> int:
    """Exponent of (-q) on the X[k,j] A(i,j) term of a row expansion."""
    return j - i


def laplace_expand_row(shape: Shape, i: int, k: int) -> AlgebraElement:
    """sum_j (-q)^(j-i) X[k,j] A(i,j): the determinant when k = i, zero otherwise."""
    n = _square_side(shape, i, k)
    out = AlgebraElement.zero(shape)
    for j in range(1, n + 1):
        term = gen(shape, k, j) * complement_minor(shape, i, j)
        out = out + term.scale(LaurentScalar.minus_q_power(row_expansion_exponent(i, j)))
    return out


def laplace_expand_col(shape: Shape, j: int, l: int) -> AlgebraElement:
    """sum_i (-q)^e(i,j) A(i,j) X[i,l] with the fitted column exponent law."""
    from .laws import col_expansion_exponent

    n = _square_side(shape, j, l)
    out = AlgebraElement.zero(shape)
    for i in range(1, n + 1):
        term = complement_minor(shape, i, j) * gen(shape, i, l)
        out = out + term.scale(LaurentScalar.minus_q_power(col_expansion_exponent(i, j)))
    return out


def _square_side(shape: Shape, a: int, b: int) -> int:
    if shape.m != shape.n:
        raise ValueError("Laplace expansions are defined for square shapes")
    if not (1 <= a <= shape.n and 1 <= b <= shape.n):
        raise ValueError(f"expansion indices ({a},{b}) out of range for {shape}")
    return shape.n


def project_pi(element: AlgebraElement, target: Shape) -> AlgebraElement:
    """Image under the surjection onto a smaller grid: X[i,j] maps to itself when
    it fits inside the target and to 0 otherwise, applied termwise."""
    source = element.shape
    s = max(target.m, target.n)
    if source.m != s or source.n != s:
        raise ValueError(
            f"projection expects a square {s}x{s} source for target {target}, got {source}"
        )
    terms: dict[PbwMonomial, LaurentScalar] = {}
    for mono, coeff in element.terms():
        if all(target.contains(i, j) for (i, j), _ in mono.pairs):
            terms[mono] = coeff
    return AlgebraElement(target, terms)
