"""Stratified (graded nilpotent) Lie algebras over exact rationals.

An algebra is described by its layer dimensions, an ordered basis labelled
layer by layer, and a one-sided table of structure constants.  The bracket of
two basis elements is stored only for ``i < j``; antisymmetry is a
normalization applied on input, never data.  All coefficients are
``fractions.Fraction``, so every later decision (rank, kernel, zero test) is
exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from ._linalg import rank


class SpecDocumentError(ValueError):
    """A structural problem in an algebra description."""


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (or a plain int) into an exact rational."""
    if isinstance(value, bool):
        raise SpecDocumentError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise SpecDocumentError(f"rationals must be decimal-free: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecDocumentError(f"not a rational: {value!r}") from exc
    raise SpecDocumentError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(q)


class Vector:
    """Sparse exact-rational element of the algebra's underlying space."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs: Mapping[int, Fraction] | None = None):
        self.dim = int(dim)
        clean: dict[int, Fraction] = {}
        for i, c in (coeffs or {}).items():
            i = int(i)
            if not 0 <= i < self.dim:
                raise ValueError(f"index {i} out of range for dimension {self.dim}")
            c = Fraction(c)
            if c:
                clean[i] = c
        self.coeffs = clean

    @classmethod
    def basis(cls, dim: int, i: int) -> "Vector":
        return cls(dim, {i: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        return sorted(self.coeffs.items())

    def __add__(self, other: "Vector") -> "Vector":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) + c
        return Vector(self.dim, out)

    def __neg__(self) -> "Vector":
        return Vector(self.dim, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def __rmul__(self, scalar) -> "Vector":
        s = Fraction(scalar)
        return Vector(self.dim, {i: s * c for i, c in self.coeffs.items()})

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Vector)
            and self.dim == other.dim
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"Vector({self.dim}, {dict(self.items())})"


class StratifiedLieAlgebra:
    """A graded Lie algebra V_1 ⊕ … ⊕ V_m with exact structure constants.

    The basis is globally ordered layer by layer, so layer membership is pure
    index arithmetic.  Instances are immutable after construction and safe to
    share between threads; every operation is a pure function of its inputs.

    Construction normalizes the bracket table (flipping ``i > j`` entries by
    antisymmetry) but does not check the Lie axioms; see :func:`validate`.
    """

    def __init__(
        self,
        name: str,
        layer_dims: Iterable[int],
        basis_labels: Iterable[str],
        brackets: Mapping[tuple[int, int], Mapping[int, Fraction]],
    ):
        self.name = str(name)
        self.layer_dims = tuple(int(d) for d in layer_dims)
        if not self.layer_dims or any(d <= 0 for d in self.layer_dims):
            raise SpecDocumentError("layer dimensions must be positive")
        self.total_dim = sum(self.layer_dims)
        self.horizontal_dim = self.layer_dims[0]
        self.basis_labels = tuple(str(s) for s in basis_labels)
        if len(self.basis_labels) != self.total_dim:
            raise SpecDocumentError(
                f"{len(self.basis_labels)} labels for dimension {self.total_dim}"
            )
        if len(set(self.basis_labels)) != self.total_dim:
            raise SpecDocumentError("duplicate basis labels")
        self._index = {s: i for i, s in enumerate(self.basis_labels)}

        layers = []
        start = 0
        for d in self.layer_dims:
            layers.append(range(start, start + d))
            start += d
        self._layer_ranges = tuple(layers)
        self._layer_of = tuple(
            j + 1 for j, rng in enumerate(self._layer_ranges) for _ in rng
        )

        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), value in brackets.items():
            i, j = int(i), int(j)
            for idx in (i, j):
                if not 0 <= idx < self.total_dim:
                    raise SpecDocumentError(f"bracket index {idx} out of range")
            entry = {int(t): Fraction(c) for t, c in value.items() if Fraction(c)}
            for t in entry:
                if not 0 <= t < self.total_dim:
                    raise SpecDocumentError(f"bracket value index {t} out of range")
            if i == j:
                if entry:
                    raise SpecDocumentError(
                        f"[{self.basis_labels[i]},{self.basis_labels[i]}] must vanish"
                    )
                continue
            if i > j:
                i, j = j, i
                entry = {t: -c for t, c in entry.items()}
            if (i, j) in table and table[(i, j)] != entry:
                raise SpecDocumentError(
                    "conflicting entries for bracket "
                    f"[{self.basis_labels[i]},{self.basis_labels[j]}]"
                )
            if entry:
                table[(i, j)] = entry
        self._table = table

    # -- basic queries ----------------------------------------------------

    @property
    def step(self) -> int:
        return len(self.layer_dims)

    @property
    def homogeneous_dimension(self) -> int:
        """Q = sum over layers of (layer weight) * (layer dimension)."""
        return sum((j + 1) * d for j, d in enumerate(self.layer_dims))

    @property
    def vertical_indices(self) -> range:
        return range(self.horizontal_dim, self.total_dim)

    @property
    def structure_constants(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {ij: dict(v) for ij, v in self._table.items()}

    def layer_of(self, i: int) -> int:
        """1-based layer number of basis index ``i``."""
        return self._layer_of[i]

    def layer_range(self, layer: int) -> range:
        """Index range of the 1-based ``layer``."""
        return self._layer_ranges[layer - 1]

    def label(self, i: int) -> str:
        return self.basis_labels[i]

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def basis_vector(self, i: int) -> Vector:
        return Vector.basis(self.total_dim, i)

    # -- operations -------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] as a sparse vector."""
        if i == j:
            return Vector(self.total_dim)
        if i < j:
            return Vector(self.total_dim, self._table.get((i, j), {}))
        entry = self._table.get((j, i), {})
        return Vector(self.total_dim, {t: -c for t, c in entry.items()})

    def bracket(self, x: Vector, y: Vector) -> Vector:
        """Bilinear antisymmetric extension of the structure constants."""
        if x.dim != self.total_dim or y.dim != self.total_dim:
            raise ValueError("dimension mismatch")
        acc: dict[int, Fraction] = {}
        for i, a in x.coeffs.items():
            for j, b in y.coeffs.items():
                if i == j:
                    continue
                for t, c in self.bracket_basis(i, j).coeffs.items():
                    acc[t] = acc.get(t, Fraction(0)) + a * b * c
        return Vector(self.total_dim, acc)

    def dilation(self, r, x: Vector) -> Vector:
        """Scale the layer-j component of ``x`` by r**j."""
        r = Fraction(r)
        if r == 0:
            raise ValueError("dilation ratio must be nonzero")
        return Vector(
            self.total_dim,
            {i: c * r ** self.layer_of(i) for i, c in x.coeffs.items()},
        )

    def __repr__(self) -> str:
        return f"StratifiedLieAlgebra({self.name!r}, layers={self.layer_dims})"


# -- validation ------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[str, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(alg: StratifiedLieAlgebra) -> ValidationReport:
    """Check the grading axioms; violations are data, not errors.

    Antisymmetry is normalized away at construction and cannot fail here.
    The remaining axioms checked, each with a witness tuple:

    * grading: [V_p, V_q] lands in V_{p+q} (zero when p+q exceeds the step);
    * jacobi: the Jacobi identity on all basis triples;
    * generation: [V_1, V_j] spans V_{j+1} for j below the step;
    * centrality: the top layer brackets to zero with everything.
    """
    out: list[Violation] = []
    n_tot = alg.total_dim

    for (i, j), entry in sorted(alg.structure_constants.items()):
        target = alg.layer_of(i) + alg.layer_of(j)
        for t in sorted(entry):
            if target > alg.step or alg.layer_of(t) != target:
                out.append(
                    Violation(
                        "grading",
                        (alg.label(i), alg.label(j)),
                        f"component on {alg.label(t)} lies outside V_{target}",
                    )
                )

    for i in range(n_tot):
        for j in range(i + 1, n_tot):
            for k in range(j + 1, n_tot):
                ei, ej, ek = (alg.basis_vector(t) for t in (i, j, k))
                jac = (
                    alg.bracket(alg.bracket(ei, ej), ek)
                    + alg.bracket(alg.bracket(ej, ek), ei)
                    + alg.bracket(alg.bracket(ek, ei), ej)
                )
                if not jac.is_zero():
                    out.append(
                        Violation(
                            "jacobi",
                            (alg.label(i), alg.label(j), alg.label(k)),
                            "Jacobi identity fails on this triple",
                        )
                    )

    for layer in range(1, alg.step):
        target = alg.layer_range(layer + 1)
        rows = []
        for a in alg.layer_range(1):
            for b in alg.layer_range(layer):
                v = alg.bracket_basis(a, b)
                rows.append([v.coeffs.get(t, Fraction(0)) for t in target])
        got = rank(rows, len(target)) if rows else 0
        if got < len(target):
            out.append(
                Violation(
                    "generation",
                    (f"V1", f"V{layer}"),
                    f"[V1, V{layer}] has rank {got}, V{layer + 1} has dimension {len(target)}",
                )
            )

    for b in alg.layer_range(alg.step):
        for i in range(n_tot):
            if i != b and not alg.bracket_basis(i, b).is_zero():
                out.append(
                    Violation(
                        "centrality",
                        (alg.label(i), alg.label(b)),
                        "top-layer element is not central",
                    )
                )

    return ValidationReport(tuple(out))


# -- description documents --------------------------------------------------


def load_algebra(doc) -> StratifiedLieAlgebra:
    """Build an algebra from a JSON-shaped description.

    ``doc`` is a mapping (or JSON text) with fields ``name``, ``layers`` (a
    list of lists of basis labels, one list per layer) and ``brackets`` (a
    list of ``{lhs, rhs, value}`` entries, where ``value`` is a list of
    ``{basis, coeff}`` and coefficients are "p/q" strings).  Unlisted
    brackets are zero.  The result is normalized but not validated.
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise SpecDocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, Mapping):
        raise SpecDocumentError("algebra description must be a JSON object")

    name = doc.get("name", "unnamed")
    layers = doc.get("layers")
    if not isinstance(layers, list) or not layers:
        raise SpecDocumentError("'layers' must be a nonempty list of label lists")
    labels: list[str] = []
    dims: list[int] = []
    for layer in layers:
        if not isinstance(layer, list) or not layer:
            raise SpecDocumentError("each layer must be a nonempty list of labels")
        if not all(isinstance(s, str) for s in layer):
            raise SpecDocumentError("basis labels must be strings")
        labels.extend(layer)
        dims.append(len(layer))
    index = {s: i for i, s in enumerate(labels)}
    if len(index) != len(labels):
        raise SpecDocumentError("duplicate basis labels")

    def resolve(label) -> int:
        if not isinstance(label, str) or label not in index:
            raise SpecDocumentError(f"unknown basis label {label!r}")
        return index[label]

    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    seen: set[tuple[int, int]] = set()
    for entry in doc.get("brackets", []):
        if not isinstance(entry, Mapping):
            raise SpecDocumentError("each bracket entry must be an object")
        i = resolve(entry.get("lhs"))
        j = resolve(entry.get("rhs"))
        value: dict[int, Fraction] = {}
        for item in entry.get("value", []):
            if not isinstance(item, Mapping):
                raise SpecDocumentError("bracket values must be {basis, coeff} objects")
            t = resolve(item.get("basis"))
            c = parse_rational(item.get("coeff"))
            if t in value:
                raise SpecDocumentError(
                    f"repeated component {labels[t]!r} in one bracket value"
                )
            value[t] = c
        key = (min(i, j), max(i, j))
        normalized = value if i < j else {t: -c for t, c in value.items()}
        if key in seen and brackets.get(key, {}) != {
            t: c for t, c in normalized.items() if c
        }:
            raise SpecDocumentError(
                f"conflicting entries for bracket [{labels[key[0]]},{labels[key[1]]}]"
            )
        seen.add(key)
        brackets[key] = normalized
    return StratifiedLieAlgebra(name, dims, labels, brackets)


def to_spec_document(alg: StratifiedLieAlgebra) -> dict:
    """Emit the round-trippable description of an algebra."""
    layers = [
        [alg.label(i) for i in alg.layer_range(layer)]
        for layer in range(1, alg.step + 1)
    ]
    brackets = []
    for (i, j), entry in sorted(alg.structure_constants.items()):
        brackets.append(
            {
                "lhs": alg.label(i),
                "rhs": alg.label(j),
                "value": [
                    {"basis": alg.label(t), "coeff": format_rational(c)}
                    for t, c in sorted(entry.items())
                ],
            }
        )
    return {"name": alg.name, "layers": layers, "brackets": brackets}
