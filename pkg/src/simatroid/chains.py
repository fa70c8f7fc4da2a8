"""Chains on a complex: sparse face-indexed vectors and boundary maps.

Signs follow the incidence rule: removing the j-th smallest vertex of a
face contributes (-1)^j, so e.g. the boundary of 123 is -23 +13 -12.
Signs are computed over the integers and then cast into the field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .complexes import HypercliqueComplex, all_faces, face_sort_key, incidence, sorted_faces, vertices
from .fields import Field, Scalar
from .linalg import ExactMatrix


class ChainVector:
    """Finitely supported face -> scalar map; zero coefficients are not stored."""

    __slots__ = ("field", "_coeffs")

    def __init__(self, field: Field, coeffs: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Scalar] = {}
        for f, a in items:
            a = field.of(a)
            if f in acc:
                a = field.add(acc[f], a)
            acc[f] = a
        self.field = field
        self._coeffs = {f: a for f, a in acc.items() if a != 0}

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._coeffs)

    def coeff(self, f: int) -> Scalar:
        return self._coeffs.get(f, self.field.zero)

    def items_lex(self) -> list[tuple[int, Scalar]]:
        return [(f, self._coeffs[f]) for f in sorted_faces(self._coeffs)]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def _require_same_field(self, other: "ChainVector") -> None:
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def add(self, other: "ChainVector") -> "ChainVector":
        self._require_same_field(other)
        out = dict(self._coeffs)
        F = self.field
        for f, a in other._coeffs.items():
            out[f] = F.add(out.get(f, F.zero), a)
        return ChainVector(F, out)

    def scale(self, a) -> "ChainVector":
        F = self.field
        a = F.of(a)
        return ChainVector(F, {f: F.mul(a, c) for f, c in self._coeffs.items()})

    def add_scaled(self, other: "ChainVector", a) -> "ChainVector":
        self._require_same_field(other)
        F = self.field
        a = F.of(a)
        out = dict(self._coeffs)
        for f, c in other._coeffs.items():
            out[f] = F.add(out.get(f, F.zero), F.mul(a, c))
        return ChainVector(F, out)

    def neg(self) -> "ChainVector":
        F = self.field
        return ChainVector(F, {f: F.neg(c) for f, c in self._coeffs.items()})

    def restrict(self, keep: Iterable[int]) -> "ChainVector":
        keep = set(keep)
        return ChainVector(self.field, {f: c for f, c in self._coeffs.items() if f in keep})

    def dense(self, order: Sequence[int]) -> tuple[Scalar, ...]:
        return tuple(self.coeff(f) for f in order)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ChainVector) and self.field == other.field
                and self._coeffs == other._coeffs)

    def __hash__(self) -> int:
        return hash((self.field, tuple(self.items_lex())))

    def __repr__(self) -> str:
        terms = ", ".join(f"{a}*{vertices(f)}" for f, a in self.items_lex())
        return f"ChainVector({self.field}; {terms or '0'})"


def boundary(c: HypercliqueComplex, f: int, field: Field) -> ChainVector:
    """Signed sum of the facets of a single face f with |f| >= 2."""
    if not c.is_face(f):
        raise ValueError(f"{vertices(f)} is not a face of {c!r}")
    if f.bit_count() < 2:
        raise ValueError("boundary needs a face with at least 2 vertices")
    coeffs = {}
    for j, v in enumerate(vertices(f), start=1):
        sub = f & ~(1 << (v - 1))
        coeffs[sub] = -1 if j % 2 else 1
    return ChainVector(field, coeffs)


def coboundary(c: HypercliqueComplex, v: int, field: Field) -> ChainVector:
    """Signed indicator of the k-faces containing the (k-1)-set v."""
    if v.bit_count() != c.k - 1:
        raise ValueError("coboundary expects a (k-1)-element face")
    if v & ~((1 << c.n) - 1):
        raise ValueError("vertex out of range")
    return ChainVector(field, {f: incidence(v, f) for f in c.faces_k if f & v == v})


@dataclass(frozen=True)
class BoundaryMatrix:
    """Dense boundary matrix: rows all (k-1)-sets of [n], columns the k-faces, both lex."""

    matrix: ExactMatrix
    row_faces: tuple[int, ...]
    col_faces: tuple[int, ...]
    field: Field

    def row_chain(self, v: int) -> ChainVector:
        i = self.row_faces.index(v)
        return ChainVector(self.field,
                           {f: a for f, a in zip(self.col_faces, self.matrix.rows[i])})

    def column_chain(self, f: int) -> ChainVector:
        j = self.col_faces.index(f)
        return ChainVector(self.field,
                           {v: row[j] for v, row in zip(self.row_faces, self.matrix.rows)})


def boundary_matrix(c: HypercliqueComplex, field: Field) -> BoundaryMatrix:
    rows = tuple(all_faces(c.n, c.k - 1))
    cols = tuple(sorted_faces(c.faces_k))
    row_pos = {v: i for i, v in enumerate(rows)}
    grid = [[field.zero] * len(cols) for _ in rows]
    for j, f in enumerate(cols):
        for v, sign in boundary(c, f, field)._coeffs.items():
            grid[row_pos[v]][j] = sign
    return BoundaryMatrix(ExactMatrix(grid, field, ncols=len(cols)), rows, cols, field)
