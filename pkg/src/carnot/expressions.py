"""Text syntax for multivectors, e.g. ``3/2*u1^u3 - u2^u4``.

``^`` is the wedge, ``*`` separates a rational coefficient from its wedge
product, and labels are resolved against an algebra's basis.  The parser
normalizes every term to a strictly increasing tuple with the permutation
sign; terms with a repeated factor vanish.  In covector mode a label may
carry a trailing ``*`` (``Z*``), which is how covectors are printed.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import StratifiedLieAlgebra
from .exterior import MultiCovector, MultiVector


class ExpressionError(ValueError):
    """Malformed multivector text; carries the 0-based error position."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"column {position + 1}: {message}")
        self.text = text
        self.position = position


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<label>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^]))"
)


def _tokenize(text: str):
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ExpressionError(f"unexpected character {text[at]!r}", text, at)
        if m.group("num") is not None:
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.group("label") is not None:
            tokens.append(("label", m.group("label"), m.start("label")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, alg: StratifiedLieAlgebra, covector: bool):
        self.text = text
        self.alg = alg
        self.covector = covector
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, at: int | None = None):
        if at is None:
            at = self.peek()[2]
        raise ExpressionError(message, self.text, at)

    def parse(self):
        terms: list[tuple[int, tuple[int, ...], Fraction]] = []
        degree: int | None = None
        sign = Fraction(1)
        kind, val, at = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = Fraction(-1) if val == "-" else Fraction(1)
        while True:
            start = self.peek()[2]
            coeff, indices = self.term()
            if degree is None:
                degree = len(indices)
            elif len(indices) != degree:
                self.fail(
                    f"term of degree {len(indices)} in an expression of degree {degree}",
                    start,
                )
            terms.append((start, indices, sign * coeff))
            kind, val, at = self.take()
            if kind == "end":
                break
            if kind != "op" or val not in "+-":
                self.fail("expected '+', '-' or end of expression", at)
            sign = Fraction(-1) if val == "-" else Fraction(1)
        if degree is None:
            self.fail("empty expression", 0)

        acc: dict[tuple[int, ...], Fraction] = {}
        for _, indices, coeff in terms:
            norm, perm_sign = _normalize(indices)
            if perm_sign == 0 or coeff == 0:
                continue
            acc[norm] = acc.get(norm, Fraction(0)) + perm_sign * coeff
        cls = MultiCovector if self.covector else MultiVector
        return cls(self.alg.total_dim, degree, acc)

    def term(self) -> tuple[Fraction, tuple[int, ...]]:
        kind, val, at = self.peek()
        coeff = Fraction(1)
        if kind == "num":
            coeff = self.rational()
            kind, val, at = self.peek()
            if kind == "op" and val == "*":
                self.take()
                return coeff, self.wedge_product()
            if kind == "label":
                self.fail("expected '*' between coefficient and labels", at)
            return coeff, ()  # scalar term
        if kind == "label":
            return coeff, self.wedge_product()
        self.fail("expected a coefficient or a basis label", at)

    def rational(self) -> Fraction:
        kind, val, at = self.take()
        num = int(val)
        kind, val, _ = self.peek()
        if kind == "op" and val == "/":
            self.take()
            kind, val, at = self.take()
            if kind != "num":
                self.fail("expected a denominator", at)
            den = int(val)
            if den == 0:
                self.fail("zero denominator", at)
            return Fraction(num, den)
        return Fraction(num)

    def wedge_product(self) -> tuple[int, ...]:
        indices = [self.basis_label()]
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "^":
                self.take()
                indices.append(self.basis_label())
            else:
                return tuple(indices)

    def basis_label(self) -> int:
        kind, val, at = self.take()
        if kind != "label":
            self.fail("expected a basis label", at)
        if self.covector:
            # allow a trailing star on covector labels: "Z*" parses like "Z"
            kind2, val2, _ = self.peek()
            if kind2 == "op" and val2 == "*":
                after = self.tokens[self.pos + 1]
                if after[0] == "op" and after[1] in "+-^" or after[0] == "end":
                    self.take()
        try:
            return self.alg.index(val)
        except KeyError:
            self.fail(f"unknown basis label {val!r}", at)


def _normalize(indices: tuple[int, ...]):
    """Sort a tuple, returning (sorted tuple, permutation sign); 0 on repeats."""
    if len(set(indices)) != len(indices):
        return tuple(sorted(indices)), 0
    order = sorted(range(len(indices)), key=indices.__getitem__)
    inv = sum(
        1
        for a in range(len(order))
        for b in range(a + 1, len(order))
        if order[a] > order[b]
    )
    return tuple(sorted(indices)), (-1 if inv & 1 else 1)


def parse_multivector(
    text: str, alg: StratifiedLieAlgebra, covector: bool = False
) -> MultiVector | MultiCovector:
    """Parse multivector text against an algebra's basis labels."""
    return _Parser(text, alg, covector).parse()


def format_multivector(m, alg: StratifiedLieAlgebra, star: bool | None = None) -> str:
    """Canonical text form: terms in lexicographic tuple order."""
    if star is None:
        star = isinstance(m, MultiCovector)
    suffix = "*" if star else ""
    if not m.terms:
        return "0"
    parts: list[str] = []
    for tup, coeff in m.items():
        body = "^".join(alg.label(i) + suffix for i in tup)
        mag = abs(coeff)
        if not tup:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not parts:
            parts.append(("-" if coeff < 0 else "") + text)
        else:
            parts.append((" - " if coeff < 0 else " + ") + text)
    return "".join(parts)


def format_vector(v, alg: StratifiedLieAlgebra) -> str:
    from .exterior import from_vector

    return format_multivector(from_vector(v), alg, star=False)
