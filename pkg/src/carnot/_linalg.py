"""Exact linear algebra over the rationals.

Forward elimination is fraction-free (Bareiss, on integer-scaled rows), so
intermediate entries stay integral; the reduced form is normalized over
``Fraction`` at the end.  Given a fixed row order and column count the output
is fully deterministic, and the reduced row echelon form is the canonical
representative of a row space.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Row = list[Fraction]


def _integerize(row) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    scale = 1
    for x in row:
        if x:
            d = Fraction(x).denominator
            scale = scale * d // gcd(scale, d)
    return [int(Fraction(x) * scale) for x in row]


def rref(rows, ncols: int) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form of the span of ``rows``.

    Returns the nonzero reduced rows together with their pivot columns.
    """
    m = [_integerize(r) for r in rows]
    m = [r for r in m if any(r)]
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), -1)
        if pr < 0:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        row_r = m[r]
        for i in range(r + 1, len(m)):
            row_i = m[i]
            head = row_i[c]
            for j in range(c, ncols):
                row_i[j] = (row_i[j] * piv - head * row_r[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
        if r == len(m):
            break

    out: list[Row] = []
    for i, c in enumerate(pivots):
        piv_val = Fraction(m[i][c])
        out.append([Fraction(v) / piv_val for v in m[i]])
    for i in range(len(out) - 1, -1, -1):
        for t in range(i):
            f = out[t][pivots[i]]
            if f:
                out[t] = [a - f * b for a, b in zip(out[t], out[i])]
    return out, pivots


def rank(rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols: int) -> tuple[list[Row], list[int]]:
    """Canonical (reduced echelon) basis of the kernel of the matrix."""
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    vecs: list[Row] = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        vecs.append(v)
    if not vecs:
        return [], []
    return rref(vecs, ncols)


def reduce_row(red: list[Row], pivots: list[int], row) -> Row:
    """Residual of ``row`` modulo a row space given in reduced echelon form."""
    v = [Fraction(x) for x in row]
    for r, c in zip(red, pivots):
        f = v[c]
        if f:
            v = [a - f * b for a, b in zip(v, r)]
    return v


def in_rowspace(red: list[Row], pivots: list[int], row) -> bool:
    return not any(reduce_row(red, pivots, row))
