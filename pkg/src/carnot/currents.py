"""Invariant precurrents and the graded boundary operator.

An invariant precurrent of degree k is identified with a constant k-vector
supported on the horizontal layer.  Its boundary is the bracket part of the
Chevalley-Eilenberg differential,

    ∂(x_1 ∧ … ∧ x_k) = Σ_{i<j} (-1)^{i+j} [x_i, x_j] ∧ x_1 ∧ … x̂_i … x̂_j … ∧ x_k,

and an invariant precurrent is a current precisely when its boundary
vanishes.  Equivalently, the contraction against dθ vanishes for every
invariant vertical 1-form θ; both routes are implemented and cross-checked
by the test suite.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from itertools import combinations

from .algebra import StratifiedLieAlgebra
from .exterior import MultiCovector, MultiVector, contract, mc_differential


class InvariantPrecurrent:
    """Degree-k precurrent with constant coefficients in ∧^k of the
    horizontal layer."""

    __slots__ = ("algebra", "coefficients")

    def __init__(self, algebra: StratifiedLieAlgebra, coefficients: MultiVector):
        if coefficients.dim != algebra.total_dim:
            raise ValueError("dimension mismatch")
        n = algebra.horizontal_dim
        bad = [i for i in coefficients.support_indices() if i >= n]
        if bad:
            labels = ", ".join(algebra.label(i) for i in sorted(bad))
            raise ValueError(f"coefficients are not horizontal (use of {labels})")
        self.algebra = algebra
        self.coefficients = coefficients

    @property
    def degree(self) -> int:
        return self.coefficients.degree

    def __repr__(self) -> str:
        return f"InvariantPrecurrent({self.algebra.name!r}, {self.coefficients!r})"


class BoundaryVector:
    """Boundary of an invariant precurrent: degree k-1, each term carrying
    exactly one second-layer index and k-2 horizontal ones."""

    __slots__ = ("algebra", "vector")

    def __init__(self, algebra: StratifiedLieAlgebra, vector: MultiVector):
        for tup in vector.terms:
            layers = [algebra.layer_of(i) for i in tup]
            if layers.count(2) != 1 or any(l > 2 for l in layers):
                raise RuntimeError(
                    f"grading bug: boundary term {tup} is not of the form "
                    "V2 ∧ (horizontal)"
                )
        self.algebra = algebra
        self.vector = vector

    def is_zero(self) -> bool:
        return self.vector.is_zero()

    def __repr__(self) -> str:
        return f"BoundaryVector({self.vector!r})"


def ce_boundary(alg: StratifiedLieAlgebra, lam: MultiVector) -> MultiVector:
    """Full Chevalley-Eilenberg boundary of a k-vector over the whole algebra.

    Degrees 0 and 1 map to zero.  ∂∘∂ = 0 is the Jacobi identity and doubles
    as a structure-constant cross-check in the tests.
    """
    if lam.dim != alg.total_dim:
        raise ValueError("dimension mismatch")
    if lam.degree <= 1:
        return MultiVector(lam.dim, max(lam.degree - 1, 0))
    acc: dict[tuple[int, ...], Fraction] = {}
    for s, c in lam.terms.items():
        for pi, pj in combinations(range(len(s)), 2):
            bracket = alg.bracket_basis(s[pi], s[pj])
            if bracket.is_zero():
                continue
            sign = -1 if (pi + pj) & 1 else 1
            rest = s[:pi] + s[pi + 1 : pj] + s[pj + 1 :]
            for t, mu in bracket.coeffs.items():
                at = bisect_left(rest, t)
                if at < len(rest) and rest[at] == t:
                    continue
                tup = rest[:at] + (t,) + rest[at:]
                total = sign * (-1 if at & 1 else 1) * c * mu
                acc[tup] = acc.get(tup, Fraction(0)) + total
    return MultiVector(lam.dim, lam.degree - 1, acc)


def invariant_boundary(T: InvariantPrecurrent) -> BoundaryVector:
    """Boundary of an invariant precurrent, with its support invariant
    asserted (a violation would signal a grading bug, not bad input)."""
    return BoundaryVector(T.algebra, ce_boundary(T.algebra, T.coefficients))


def is_current(T: InvariantPrecurrent) -> bool:
    """True when the precurrent is a current, i.e. its boundary vanishes.

    Degrees 0 and 1 are always currents.
    """
    if T.degree <= 1:
        return True
    return invariant_boundary(T).is_zero()


def vertical_basis(alg: StratifiedLieAlgebra) -> list[MultiCovector]:
    """Dual covectors of the non-horizontal basis elements, in basis order.

    These span the invariant 1-forms annihilating every horizontal vector.
    """
    return [
        MultiCovector(alg.total_dim, 1, {(i,): Fraction(1)})
        for i in alg.vertical_indices
    ]


def is_vertical(alg: StratifiedLieAlgebra, theta: MultiCovector) -> bool:
    if theta.degree != 1:
        return False
    return all(i >= alg.horizontal_dim for i in theta.support_indices())


def restrict_by_dtheta(T: InvariantPrecurrent, theta: MultiCovector) -> MultiVector:
    """Contraction of the precurrent's coefficients against dθ.

    Rejects non-vertical θ rather than projecting: the current criterion
    quantifies over vertical 1-forms only, and silent projection would mask
    caller bugs.
    """
    if theta.degree != 1:
        raise ValueError("theta must be a 1-covector")
    if not is_vertical(T.algebra, theta):
        raise ValueError("theta must be vertical (vanish on the horizontal layer)")
    if T.degree < 2:
        raise ValueError("restriction needs degree at least 2")
    return contract(T.coefficients, mc_differential(T.algebra, theta))


def pushforward_scale(T: InvariantPrecurrent, r) -> Fraction:
    """Scalar by which the dilation of ratio r pushes the precurrent
    forward: r**(k - Q) with Q the homogeneous dimension."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("dilation ratio must be positive")
    return r ** (T.degree - T.algebra.homogeneous_dimension)
