"""Invariant cycle spaces and the vertical ideal of forms.

Both computations bottom out in exact echelon forms, so dimensions and
coverage questions are decided with no tolerance policy.  Bases are returned
in reduced echelon form over the lexicographic tuple order, which makes them
canonical: recomputation, in any thread, reproduces the same matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from ._linalg import in_rowspace, nullspace, rref
from .algebra import StratifiedLieAlgebra
from .currents import ce_boundary, vertical_basis
from .exterior import MultiCovector, MultiVector, basis_covector, mc_differential, wedge


@dataclass(frozen=True)
class Subspace:
    """Subspace of ∧^k (of the space or its dual) in reduced echelon form."""

    degree: int
    kind: str  # "vector" or "covector"
    space_dim: int
    tuples: tuple[tuple[int, ...], ...]
    matrix: tuple[tuple[Fraction, ...], ...]
    pivots: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    @property
    def ambient_dimension(self) -> int:
        return len(self.tuples)

    @property
    def codimension(self) -> int:
        return self.ambient_dimension - self.dimension

    def element(self, i: int):
        row = self.matrix[i]
        cls = MultiVector if self.kind == "vector" else MultiCovector
        return cls(
            self.space_dim,
            self.degree,
            {t: c for t, c in zip(self.tuples, row) if c},
        )

    @property
    def basis(self) -> list:
        return [self.element(i) for i in range(self.dimension)]

    def contains(self, element) -> bool:
        if element.degree != self.degree or element.dim != self.space_dim:
            return False
        known = set(self.tuples)
        if any(t not in known for t in element.terms):
            return False
        row = [element.coefficient(t) for t in self.tuples]
        return in_rowspace([list(r) for r in self.matrix], list(self.pivots), row)


def _subspace_from_rows(degree, kind, space_dim, tuples, rows, pivots) -> Subspace:
    return Subspace(
        degree,
        kind,
        space_dim,
        tuple(tuples),
        tuple(tuple(r) for r in rows),
        tuple(pivots),
    )


def invariant_cycle_space(alg: StratifiedLieAlgebra, k: int) -> Subspace:
    """Kernel of the boundary map on horizontal k-vectors.

    Degrees 0 and 1 give the full space (1-precurrents have no boundary);
    degrees above the horizontal rank give the zero space.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    n = alg.horizontal_dim
    cols = list(combinations(range(n), k))
    if k > n:
        return _subspace_from_rows(k, "vector", alg.total_dim, (), (), ())
    if k <= 1:
        identity = [
            [Fraction(1 if i == j else 0) for j in range(len(cols))]
            for i in range(len(cols))
        ]
        return _subspace_from_rows(
            k, "vector", alg.total_dim, cols, identity, range(len(cols))
        )
    rows: dict[tuple[int, ...], list[Fraction]] = {}
    for ci, s in enumerate(cols):
        image = ce_boundary(alg, MultiVector(alg.total_dim, k, {s: Fraction(1)}))
        for tup, val in image.terms.items():
            rows.setdefault(tup, [Fraction(0)] * len(cols))[ci] = val
    kernel, pivots = nullspace([rows[t] for t in sorted(rows)], len(cols))
    return _subspace_from_rows(k, "vector", alg.total_dim, cols, kernel, pivots)


def no_invariant_currents(alg: StratifiedLieAlgebra, k: int) -> bool:
    """True when the space of invariant k-cycles is zero."""
    return invariant_cycle_space(alg, k).dimension == 0


def vertical_ideal(alg: StratifiedLieAlgebra, k: int) -> Subspace:
    """Span of {θ ∧ α} ∪ {dθ ∧ β} over the invariant vertical 1-forms θ.

    Products θ ∧ α against the basis (k-1)-covectors are, up to sign, exactly
    the basis k-covectors carrying a vertical index, so only the purely
    horizontal coordinates of the dθ ∧ β generators need elimination.
    """
    if k < 1:
        raise ValueError("degree must be at least 1")
    total = alg.total_dim
    n = alg.horizontal_dim
    all_tuples = list(combinations(range(total), k))
    col_of = {t: i for i, t in enumerate(all_tuples)}
    # sorted tuples carry a vertical index exactly when the last one is vertical
    a_tuples = [t for t in all_tuples if t and t[-1] >= n]
    hor_tuples = [t for t in all_tuples if not t or t[-1] < n]

    reduced_b: list[list[Fraction]] = []
    pivots_b: list[int] = []
    if k >= 2 and hor_tuples:
        gen_rows = []
        for theta in vertical_basis(alg):
            dtheta = mc_differential(alg, theta)
            if dtheta.is_zero():
                continue
            for beta in combinations(range(total), k - 2):
                w = wedge(dtheta, basis_covector(total, beta))
                row = [w.coefficient(t) for t in hor_tuples]
                if any(row):
                    gen_rows.append(row)
        reduced_b, pivots_b = rref(gen_rows, len(hor_tuples))

    merged: list[tuple[int, list[Fraction]]] = []
    for t in a_tuples:
        row = [Fraction(0)] * len(all_tuples)
        row[col_of[t]] = Fraction(1)
        merged.append((col_of[t], row))
    for local_row, local_piv in zip(reduced_b, pivots_b):
        row = [Fraction(0)] * len(all_tuples)
        for t, val in zip(hor_tuples, local_row):
            row[col_of[t]] = val
        merged.append((col_of[hor_tuples[local_piv]], row))
    merged.sort(key=lambda item: item[0])
    return _subspace_from_rows(
        k,
        "covector",
        total,
        all_tuples,
        [row for _, row in merged],
        [piv for piv, _ in merged],
    )


def vertical_ideal_covers(alg: StratifiedLieAlgebra, k: int) -> tuple[bool, int]:
    """Whether the vertical ideal is all of ∧^k of the dual, and by how much
    it falls short."""
    sub = vertical_ideal(alg, k)
    full = comb(alg.total_dim, k)
    return sub.dimension == full, full - sub.dimension
