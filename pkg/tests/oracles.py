"""Independent oracle implementations used to cross-check the library.

Nothing here shares code with the implementation paths it checks: the
contraction oracle expands the defining identity term by term, the echelon
oracle is plain Gauss-Jordan over Fraction, ranks come from sympy, and the
vertical ideal oracle spans the raw generator products without the
structured shortcut.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import sympy

from carnot.currents import vertical_basis
from carnot.exterior import (
    MultiCovector,
    MultiVector,
    basis_covector,
    mc_differential,
    pair,
    wedge,
)


def oracle_contract(lam: MultiVector, alpha: MultiCovector) -> MultiVector:
    """Assemble u ⌟ a coordinate by coordinate from <a ∧ b, u>."""
    k = lam.degree - alpha.degree
    terms = {}
    for b in combinations(range(lam.dim), k):
        val = pair(wedge(alpha, basis_covector(lam.dim, b)), lam)
        if val:
            terms[b] = val
    return MultiVector(lam.dim, k, terms)


def naive_rref(rows, ncols):
    """Textbook Gauss-Jordan over Fraction (no fraction-free machinery)."""
    m = [[Fraction(x) for x in r] for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [m[i] for i in range(len(pivots))], pivots


def sympy_rank(rows, ncols) -> int:
    if not rows:
        return 0
    mat = sympy.Matrix([[sympy.Rational(x) for x in r] for r in rows])
    return mat.rank()


def generic_vertical_ideal_matrix(alg, k):
    """Span of all raw products θ ∧ α and dθ ∧ β, reduced by the naive
    elimination; returns (rref rows, pivots, column tuples)."""
    total = alg.total_dim
    cols = list(combinations(range(total), k))
    pos = {t: i for i, t in enumerate(cols)}
    rows = []

    def add(w):
        row = [Fraction(0)] * len(cols)
        for t, c in w.terms.items():
            row[pos[t]] = c
        if any(row):
            rows.append(row)

    for theta in vertical_basis(alg):
        for alpha in combinations(range(total), k - 1):
            add(wedge(theta, basis_covector(total, alpha)))
        if k >= 2:
            dtheta = mc_differential(alg, theta)
            for beta in combinations(range(total), k - 2):
                add(wedge(dtheta, basis_covector(total, beta)))
    red, piv = naive_rref(rows, len(cols))
    return red, piv, cols


def random_fraction(rng: random.Random, span: int = 9) -> Fraction:
    num = rng.randint(-span, span)
    den = rng.randint(1, span)
    return Fraction(num, den)


def random_multivector(
    rng: random.Random,
    dim: int,
    degree: int,
    max_terms: int = 3,
    upper: int | None = None,
) -> MultiVector:
    """Random sparse multivector; indices drawn below ``upper`` (default all)."""
    pool = list(combinations(range(upper if upper is not None else dim), degree))
    if not pool:
        return MultiVector(dim, degree)
    picks = rng.sample(pool, min(max_terms, len(pool)))
    terms = {t: random_fraction(rng) for t in picks}
    return MultiVector(dim, degree, terms)


def random_covector(rng: random.Random, dim: int, degree: int, max_terms: int = 3) -> MultiCovector:
    pool = list(combinations(range(dim), degree))
    if not pool:
        return MultiCovector(dim, degree)
    picks = rng.sample(pool, min(max_terms, len(pool)))
    return MultiCovector(dim, degree, {t: random_fraction(rng) for t in picks})
