"""Constructors for the named test algebras.

Label conventions follow the usual notation: X_i, Y_i, Z for the Heisenberg
algebras and u's over v's for the step-2 examples, so command-line output
reads like the literature.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .algebra import StratifiedLieAlgebra

ONE = Fraction(1)


def heisenberg(n: int) -> StratifiedLieAlgebra:
    """The n-th Heisenberg algebra: [X_i, Y_i] = Z, everything else commutes.

    Layers [2n, 1]; homogeneous dimension 2n + 2.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    labels = []
    for i in range(1, n + 1):
        labels += [f"X{i}", f"Y{i}"]
    labels.append("Z")
    brackets = {(2 * i, 2 * i + 1): {2 * n: ONE} for i in range(n)}
    return StratifiedLieAlgebra(f"heisenberg({n})", [2 * n, 1], labels, brackets)


def abelian(n: int) -> StratifiedLieAlgebra:
    """R^n as a single-layer algebra with zero bracket."""
    if n < 1:
        raise ValueError("n must be at least 1")
    labels = [f"e{i}" for i in range(1, n + 1)]
    return StratifiedLieAlgebra(f"abelian({n})", [n], labels, {})


def counterexample_9d() -> StratifiedLieAlgebra:
    """Step-2 algebra on u_1..u_4 over v_1..v_5 where no two independent
    horizontal vectors commute, yet u1∧u2 - u3∧u4 is a cycle."""
    labels = [f"u{i}" for i in range(1, 5)] + [f"v{i}" for i in range(1, 6)]
    brackets = {
        (0, 1): {4: ONE},  # [u1,u2] = v1
        (2, 3): {4: ONE},  # [u3,u4] = v1
        (0, 2): {5: ONE},  # [u1,u3] = v2
        (0, 3): {6: ONE},  # [u1,u4] = v3
        (1, 2): {7: ONE},  # [u2,u3] = v4
        (1, 3): {8: ONE},  # [u2,u4] = v5
    }
    return StratifiedLieAlgebra("counterexample_9d", [4, 5], labels, brackets)


def engel() -> StratifiedLieAlgebra:
    """Step-3 algebra with layers [2, 1, 1]: [X1,X2] = X3, [X1,X3] = X4."""
    labels = ["X1", "X2", "X3", "X4"]
    brackets = {(0, 1): {2: ONE}, (0, 2): {3: ONE}}
    return StratifiedLieAlgebra("engel", [2, 1, 1], labels, brackets)


def free_step2(n: int) -> StratifiedLieAlgebra:
    """Free nilpotent algebra of step 2 on n generators: every [u_i, u_j]
    with i < j is its own second-layer generator."""
    if n < 2:
        raise ValueError("n must be at least 2")
    labels = [f"u{i}" for i in range(1, n + 1)]
    pairs = list(combinations(range(n), 2))
    labels += [f"v{i + 1}_{j + 1}" for i, j in pairs]
    brackets = {(i, j): {n + t: ONE} for t, (i, j) in enumerate(pairs)}
    return StratifiedLieAlgebra(
        f"free_step2({n})", [n, len(pairs)], labels, brackets
    )


CATALOG = {
    "heisenberg": (heisenberg, 1),
    "abelian": (abelian, 1),
    "counterexample_9d": (counterexample_9d, 0),
    "engel": (engel, 0),
    "free_step2": (free_step2, 1),
}


def names() -> list[str]:
    return sorted(CATALOG)


def build(name: str, *params: int) -> StratifiedLieAlgebra:
    """Instantiate a catalog algebra by name."""
    try:
        factory, arity = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog algebra {name!r}") from None
    if len(params) != arity:
        raise ValueError(
            f"catalog algebra {name!r} takes {arity} parameter(s), got {len(params)}"
        )
    return factory(*params)
