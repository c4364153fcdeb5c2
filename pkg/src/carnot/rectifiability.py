"""Simple invariant cycles, decomposability, and rectifiability verdicts.

A simple invariant k-cycle u_1 ∧ … ∧ u_k exists exactly when the horizontal
layer contains a rank-k abelian subalgebra, which in turn decides pure
k-unrectifiability.  There is no complete algorithm for that search in
general, so verdicts are three-valued: YES always carries an exactly
re-verified witness, NO a finite certificate, and UNKNOWN names the strategy
that was exhausted.  Searches run in a fixed canonical order (lexicographic
by basis tuple, then by coefficient height), so results are deterministic
regardless of scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb

from .algebra import StratifiedLieAlgebra, Vector
from .currents import ce_boundary
from .exterior import (
    MultiVector,
    basis_covector,
    contract,
    from_vector,
    to_vector,
    wedge,
)
from .expressions import format_multivector

YES = "YES"
NO = "NO"
UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Verdict:
    """Three-valued certified answer to a search problem."""

    status: str
    reason: str
    witness: tuple[Vector, ...] | None = None
    cycle: MultiVector | None = None
    certificate: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in (YES, NO, UNKNOWN):
            raise ValueError(f"invalid status {self.status!r}")


def plucker_decomposable(omega: MultiVector) -> bool:
    """Whether a 2-vector is a single wedge u ∧ v; equivalent to ω ∧ ω = 0."""
    if omega.degree != 2:
        raise ValueError("the wedge-square criterion applies to 2-vectors")
    return wedge(omega, omega).is_zero()


def decompose(omega: MultiVector) -> tuple[Vector, ...] | None:
    """Factor a k-vector as u_1 ∧ … ∧ u_k, or return None.

    Contracting against the duals of the lexicographically first nonzero
    coefficient window reconstructs the factors of a decomposable vector up
    to the scalar c**(k-1); the reconstruction is verified exactly, so a
    successful return is always a genuine factorization.
    """
    k = omega.degree
    if omega.is_zero():
        return None
    if k == 0:
        return ()
    if k == 1:
        return (to_vector(omega),)
    window, c = min(omega.items())
    factors = []
    for drop in range(k):
        co = basis_covector(omega.dim, window[:drop] + window[drop + 1 :])
        factors.append(contract(omega, co))
    w = factors[0]
    for f in factors[1:]:
        w = wedge(w, f)
    scale = c ** (k - 1)
    if w == scale * omega:
        factors[0] = Fraction(1, 1) / scale * factors[0]
    elif w == -scale * omega:
        factors[0] = Fraction(-1, 1) / scale * factors[0]
    else:
        return None
    return tuple(to_vector(f) for f in factors)


def _verified_yes(
    alg: StratifiedLieAlgebra,
    vectors: tuple[Vector, ...],
    reason: str,
    certificate: dict,
) -> Verdict:
    """Build a YES verdict only after re-checking the witness exactly."""
    for u, v in combinations(vectors, 2):
        if not alg.bracket(u, v).is_zero():
            raise RuntimeError("witness verification failed: factors do not commute")
    w = from_vector(vectors[0])
    for v in vectors[1:]:
        w = wedge(w, from_vector(v))
    if w.is_zero():
        raise RuntimeError("witness verification failed: factors are dependent")
    if not ce_boundary(alg, w).is_zero():
        raise RuntimeError("witness verification failed: wedge is not a cycle")
    return Verdict(YES, reason, witness=tuple(vectors), certificate=certificate)


def _height(q: Fraction) -> int:
    return max(abs(q.numerator), q.denominator)


def _search_rationals(bound: int) -> list[Fraction]:
    vals = {Fraction(0)}
    for p in range(1, bound + 1):
        for q in range(1, bound + 1):
            f = Fraction(p, q)
            if _height(f) <= bound:
                vals.add(f)
                vals.add(-f)
    return sorted(vals, key=lambda f: (_height(f), f))


def _search_coefficients(dim: int, bound: int):
    """Coefficient tuples in canonical order: by height level, then
    lexicographically; the first nonzero entry is positive (projective
    sign normalization)."""
    values = _search_rationals(bound)
    for level in range(1, bound + 1):
        pool = [v for v in values if _height(v) <= level]
        for combo in product(pool, repeat=dim):
            if max(_height(v) for v in combo) != level:
                continue
            first = next((v for v in combo if v), None)
            if first is None or first < 0:
                continue
            yield combo


def find_simple_cycle(
    alg: StratifiedLieAlgebra, k: int, height_bound: int = 5
) -> Verdict:
    """Search for k pairwise-commuting independent horizontal vectors.

    Strategy cascade: (1) scan k-subsets of the horizontal basis; (2) a
    trivial cycle space proves NO; (3) a one-dimensional cycle space is
    decided completely by decomposing its generator; (4) bounded-height
    rational combinations of the cycle-space basis, decided per candidate by
    exact factorization, ending in UNKNOWN when exhausted.
    """
    n = alg.horizontal_dim
    if not 1 <= k <= n:
        raise ValueError(f"degree must lie in 1..{n}")
    if height_bound < 1:
        raise ValueError("height bound must be at least 1")

    for subset in combinations(range(n), k):
        if all(
            alg.bracket_basis(i, j).is_zero() for i, j in combinations(subset, 2)
        ):
            witness = tuple(alg.basis_vector(i) for i in subset)
            return _verified_yes(
                alg,
                witness,
                "pairwise-commuting subset of the horizontal basis",
                {
                    "strategy": "basis-subset",
                    "subset": [alg.label(i) for i in subset],
                },
            )

    from .rumin import invariant_cycle_space

    kernel = invariant_cycle_space(alg, k)
    if kernel.dimension == 0:
        return Verdict(
            NO,
            "kernel is zero: every nonzero horizontal k-vector has a boundary",
            certificate={
                "strategy": "kernel-rank",
                "boundary_rank": comb(n, k),
                "domain_dimension": comb(n, k),
            },
        )

    if k == 2 and kernel.dimension == 1:
        generator = kernel.element(0)
        square = wedge(generator, generator)
        if not square.is_zero():
            return Verdict(
                NO,
                "kernel generator is not decomposable",
                certificate={
                    "strategy": "plucker",
                    "generator": format_multivector(generator, alg),
                    "wedge_square": format_multivector(square, alg),
                },
            )
        factors = decompose(generator)
        return _verified_yes(
            alg,
            factors,
            "the unique invariant cycle direction is simple",
            {
                "strategy": "plucker",
                "generator": format_multivector(generator, alg),
                "wedge_square": "0",
            },
        )

    basis = kernel.basis
    for coeffs in _search_coefficients(kernel.dimension, height_bound):
        omega = MultiVector(alg.total_dim, k)
        for c, g in zip(coeffs, basis):
            if c:
                omega = omega + c * g
        factors = decompose(omega)
        if factors is not None:
            return _verified_yes(
                alg,
                factors,
                "decomposable cycle found by bounded-height search",
                {
                    "strategy": "height-search",
                    "height_bound": height_bound,
                    "combination": [str(c) for c in coeffs],
                },
            )
        if kernel.dimension == 1:
            # one projective candidate, and factorization is a complete
            # decomposability test for a single vector
            return Verdict(
                NO,
                "kernel generator is not decomposable",
                certificate={
                    "strategy": "decomposability",
                    "generator": format_multivector(kernel.element(0), alg),
                },
            )
    return Verdict(
        UNKNOWN,
        f"search exhausted at height bound {height_bound}",
        certificate={
            "strategy": "height-search",
            "height_bound": height_bound,
            "kernel_dimension": kernel.dimension,
        },
    )


def is_purely_unrectifiable(alg: StratifiedLieAlgebra, k: int) -> Verdict:
    """YES when no nontrivial k-rectifiable subsets exist.

    The decision is the negation of the simple-cycle search: a rank-k
    horizontal abelian subalgebra exists exactly when rectifiable sets do.
    Degrees above the horizontal rank are unrectifiable outright.
    """
    if k < 1:
        raise ValueError("degree must be at least 1")
    if k > alg.horizontal_dim:
        return Verdict(
            YES,
            "degree exceeds horizontal rank",
            certificate={"horizontal_dim": alg.horizontal_dim},
        )
    inner = find_simple_cycle(alg, k)
    if inner.status == YES:
        return Verdict(
            NO,
            "a rank-k horizontal abelian subalgebra exists",
            witness=inner.witness,
            certificate=inner.certificate,
        )
    if inner.status == NO:
        return Verdict(
            YES,
            f"no simple invariant cycles: {inner.reason}",
            certificate=inner.certificate,
        )
    return inner


def nonsimple_cycle_exists(alg: StratifiedLieAlgebra, k: int) -> Verdict:
    """YES when invariant k-cycles exist but none of them is simple.

    Such spaces carry nontrivial invariant currents while admitting no
    k-rectifiable sets at all.
    """
    n = alg.horizontal_dim
    if not 1 <= k <= n:
        raise ValueError(f"degree must lie in 1..{n}")

    from .rumin import invariant_cycle_space

    kernel = invariant_cycle_space(alg, k)
    if kernel.dimension == 0:
        return Verdict(
            NO,
            "the cycle space is zero",
            certificate={
                "strategy": "kernel-rank",
                "boundary_rank": comb(n, k),
                "domain_dimension": comb(n, k),
            },
        )
    inner = find_simple_cycle(alg, k)
    if inner.status == NO:
        return Verdict(
            YES,
            "nontrivial cycles exist but none is simple",
            cycle=kernel.element(0),
            certificate=inner.certificate,
        )
    if inner.status == YES:
        return Verdict(
            NO,
            "simple cycles exist",
            witness=inner.witness,
            certificate=inner.certificate,
        )
    return inner
