"""Exterior algebra over the algebra and its dual.

Multivectors and multicovectors are sparse maps from strictly increasing
index tuples to exact rationals.  The basis and its dual are declared
orthonormal, so the pairing is the Kronecker pairing on tuples.  The interior
product follows the convention that wedges the covector on the left:

    <b, u ⌟ a> = <a ∧ b, u>   for every test covector b.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .algebra import StratifiedLieAlgebra, Vector


class _Alternating:
    """Shared sparse representation for ∧^k of the space and of its dual."""

    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim: int, degree: int, terms: Mapping | None = None):
        self.dim = int(dim)
        self.degree = int(degree)
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[tuple[int, ...], Fraction] = {}
        for tup, c in (terms or {}).items():
            tup = tuple(int(i) for i in tup)
            if len(tup) != self.degree:
                raise ValueError(f"tuple {tup} does not have degree {self.degree}")
            if any(not 0 <= i < self.dim for i in tup):
                raise ValueError(f"tuple {tup} out of range for dimension {self.dim}")
            if any(a >= b for a, b in zip(tup, tup[1:])):
                raise ValueError(f"tuple {tup} is not strictly increasing")
            c = Fraction(c)
            if c:
                clean[tup] = c
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, tup) -> Fraction:
        return self.terms.get(tuple(tup), Fraction(0))

    def items(self):
        return sorted(self.terms.items())

    def support_indices(self) -> set[int]:
        return {i for tup in self.terms for i in tup}

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, Fraction(0)) + c
        return self.__class__(self.dim, self.degree, out)

    def __neg__(self):
        return self.__class__(
            self.dim, self.degree, {t: -c for t, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        s = Fraction(scalar)
        return self.__class__(
            self.dim, self.degree, {t: s * c for t, c in self.terms.items()}
        )

    __mul__ = __rmul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        return (
            type(other) is type(self)
            and self.dim == other.dim
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}({self.dim}, {self.degree}, "
            f"{dict(self.items())})"
        )

    def _check_compatible(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        if self.degree != other.degree:
            raise ValueError("degree mismatch")


class MultiVector(_Alternating):
    """Element of ∧^k of the underlying space."""


class MultiCovector(_Alternating):
    """Element of ∧^k of the dual space."""


def basis_multivector(dim: int, indices) -> MultiVector:
    return MultiVector(dim, len(tuple(indices)), {tuple(indices): Fraction(1)})


def basis_covector(dim: int, indices) -> MultiCovector:
    return MultiCovector(dim, len(tuple(indices)), {tuple(indices): Fraction(1)})


def from_vector(v: Vector) -> MultiVector:
    return MultiVector(v.dim, 1, {(i,): c for i, c in v.coeffs.items()})


def to_vector(m: MultiVector) -> Vector:
    if m.degree != 1:
        raise ValueError("only degree-1 multivectors convert to vectors")
    return Vector(m.dim, {t[0]: c for t, c in m.terms.items()})


def basis_tuples(k: int, n: int) -> list[tuple[int, ...]]:
    """All strictly increasing k-tuples in {1..n}, lexicographically.

    Returns the empty list when k exceeds n.
    """
    if k < 0 or n < 0:
        raise ValueError("degree and dimension must be nonnegative")
    return list(combinations(range(1, n + 1), k))


def _merge(s: tuple[int, ...], t: tuple[int, ...]):
    """Sorted union of two disjoint tuples and the shuffle sign.

    Returns ``(None, 0)`` when the tuples overlap.
    """
    i = j = 0
    inv = 0
    out: list[int] = []
    while i < len(s) and j < len(t):
        if s[i] == t[j]:
            return None, 0
        if s[i] < t[j]:
            out.append(s[i])
            i += 1
        else:
            out.append(t[j])
            inv += len(s) - i
            j += 1
    out.extend(s[i:])
    out.extend(t[j:])
    return tuple(out), (-1 if inv & 1 else 1)


def _split(s: tuple[int, ...], t: tuple[int, ...]):
    """Remainder of ``s`` after removing ``t``, with the shuffle sign that
    moves the elements of ``t`` to the front.  ``(0, ())`` when t ⊄ s."""
    inv = 0
    rest: list[int] = []
    ti = 0
    for x in s:
        if ti < len(t) and x == t[ti]:
            inv += len(rest)
            ti += 1
        else:
            rest.append(x)
    if ti < len(t):
        return 0, ()
    return (-1 if inv & 1 else 1), tuple(rest)


def wedge(a, b):
    """Graded-anticommutative product; both arguments of the same kind."""
    if type(a) is not type(b):
        raise TypeError("wedge requires two multivectors or two multicovectors")
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    acc: dict[tuple[int, ...], Fraction] = {}
    for s, ca in a.terms.items():
        for t, cb in b.terms.items():
            merged, sign = _merge(s, t)
            if merged is None:
                continue
            acc[merged] = acc.get(merged, Fraction(0)) + sign * ca * cb
    return a.__class__(a.dim, a.degree + b.degree, acc)


def pair(alpha: MultiCovector, lam: MultiVector) -> Fraction:
    """Kronecker pairing of equal-degree covectors and vectors."""
    if not isinstance(alpha, MultiCovector) or not isinstance(lam, MultiVector):
        raise TypeError("pair takes a multicovector and a multivector")
    if alpha.degree != lam.degree:
        raise ValueError("degree mismatch")
    small, large = (
        (alpha.terms, lam.terms)
        if len(alpha.terms) <= len(lam.terms)
        else (lam.terms, alpha.terms)
    )
    total = Fraction(0)
    for t, c in small.items():
        other = large.get(t)
        if other:
            total += c * other
    return total


def contract(lam: MultiVector, alpha: MultiCovector) -> MultiVector:
    """Interior product u ⌟ a, the unique (k-j)-vector with
    <b, u ⌟ a> = <a ∧ b, u> for every (k-j)-covector b."""
    if not isinstance(lam, MultiVector) or not isinstance(alpha, MultiCovector):
        raise TypeError("contract takes a multivector and a multicovector")
    if lam.dim != alpha.dim:
        raise ValueError("dimension mismatch")
    if alpha.degree > lam.degree:
        raise ValueError("covector degree exceeds multivector degree")
    acc: dict[tuple[int, ...], Fraction] = {}
    for s, c in lam.terms.items():
        for t, a in alpha.terms.items():
            sign, rest = _split(s, t)
            if sign:
                acc[rest] = acc.get(rest, Fraction(0)) + sign * c * a
    return MultiVector(lam.dim, lam.degree - alpha.degree, acc)


def mc_differential(alg: StratifiedLieAlgebra, theta: MultiCovector) -> MultiCovector:
    """Differential of an invariant 1-form: <dθ, x ∧ y> = -<θ, [x, y]>."""
    if not isinstance(theta, MultiCovector) or theta.degree != 1:
        raise ValueError("the differential is defined for 1-covectors")
    if theta.dim != alg.total_dim:
        raise ValueError("dimension mismatch")
    acc: dict[tuple[int, ...], Fraction] = {}
    for (i, j), entry in alg.structure_constants.items():
        val = -sum(
            (theta.terms.get((t,), Fraction(0)) * c for t, c in entry.items()),
            Fraction(0),
        )
        if val:
            acc[(i, j)] = val
    return MultiCovector(alg.total_dim, 2, acc)


def dilate_multivector(alg: StratifiedLieAlgebra, r, m: MultiVector) -> MultiVector:
    """Apply the dilation automorphism to a multivector: each basis tuple is
    scaled by r raised to the sum of its layer weights."""
    r = Fraction(r)
    if r == 0:
        raise ValueError("dilation ratio must be nonzero")
    if m.dim != alg.total_dim:
        raise ValueError("dimension mismatch")
    return MultiVector(
        m.dim,
        m.degree,
        {
            tup: c * r ** sum(alg.layer_of(i) for i in tup)
            for tup, c in m.terms.items()
        },
    )
