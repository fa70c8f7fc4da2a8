"""Dense exact linear algebra over a Field.

Deterministic throughout: elimination scans columns left to right and
always pivots on the first row with a nonzero entry, so identical inputs
give identical echelon forms, bases, and orderings on every run.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .fields import Field, Scalar


class ExactMatrix:
    """Immutable dense matrix with exact entries."""

    def __init__(self, rows: Iterable[Sequence], field: Field, ncols: int | None = None):
        self.field = field
        self.rows: tuple[tuple[Scalar, ...], ...] = tuple(
            tuple(field.of(a) for a in row) for row in rows
        )
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            self.ncols = widths.pop()
            if ncols is not None and ncols != self.ncols:
                raise ValueError("ncols does not match rows")
        else:
            if ncols is None:
                raise ValueError("ncols required for a matrix with no rows")
            self.ncols = ncols
        self.nrows = len(self.rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field) -> "ExactMatrix":
        z = field.zero
        return cls([[z] * ncols for _ in range(nrows)], field, ncols=ncols)

    @classmethod
    def identity(cls, n: int, field: Field) -> "ExactMatrix":
        z, o = field.zero, field.one
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], field)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], field: Field, nrows: int | None = None) -> "ExactMatrix":
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            raise ValueError("nrows required for a matrix with no columns")
        return cls([[col[i] for col in cols] for i in range(nrows)], field, ncols=len(cols))

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.from_columns([list(r) for r in self.rows], self.field, nrows=self.ncols)

    def column_submatrix(self, indices: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[row[j] for j in indices] for row in self.rows],
                           self.field, ncols=len(indices))

    def mul_vector(self, x: Sequence) -> tuple[Scalar, ...]:
        F = self.field
        xs = [F.of(a) for a in x]
        if len(xs) != self.ncols:
            raise ValueError("dimension mismatch")
        out = []
        for row in self.rows:
            acc = F.zero
            for a, b in zip(row, xs):
                if a != 0 and b != 0:
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return tuple(out)

    @cached_property
    def _rref(self) -> tuple[tuple[int, ...], tuple[tuple[Scalar, ...], ...]]:
        """Reduced row echelon form: (pivot column indices, reduced rows)."""
        F = self.field
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            sel = None
            for i in range(r, self.nrows):
                if rows[i][c] != 0:
                    sel = i
                    break
            if sel is None:
                continue
            rows[r], rows[sel] = rows[sel], rows[r]
            inv = F.inv(rows[r][c])
            rows[r] = [F.mul(inv, a) for a in rows[r]]
            for i in range(self.nrows):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return tuple(pivots), tuple(tuple(row) for row in rows)

    def rank(self) -> int:
        return len(self._rref[0])

    def rref(self) -> tuple[tuple[int, ...], tuple[tuple[Scalar, ...], ...]]:
        return self._rref

    def nullspace_basis(self) -> list[tuple[Scalar, ...]]:
        """One basis vector per free column, in ascending free-column order."""
        F = self.field
        pivots, rows = self._rref
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for f in free:
            vec = [F.zero] * self.ncols
            vec[f] = F.one
            for i, c in enumerate(pivots):
                vec[c] = F.neg(rows[i][f])
            basis.append(tuple(vec))
        return basis

    def in_row_space(self, vec: Sequence, field: Field | None = None) -> bool:
        F = self.field
        if field is not None and field != F:
            raise ValueError(f"field mismatch: vector over {field}, matrix over {F}")
        v = [F.of(a) for a in vec]
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        pivots, rows = self._rref
        for i, c in enumerate(pivots):
            if v[c] != 0:
                f = v[c]
                v = [F.sub(a, F.mul(f, b)) for a, b in zip(v, rows[i])]
        return all(a == 0 for a in v)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ExactMatrix) and self.field == other.field
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols} over {self.field})"


class IncrementalRank:
    """Grow an independent family one vector at a time.

    add() returns True iff the vector enlarged the span; rejected vectors
    leave the state untouched.
    """

    def __init__(self, field: Field):
        self.field = field
        self._pivots: list[tuple[int, list[Scalar]]] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, vec: Sequence) -> list[Scalar]:
        F = self.field
        v = [F.of(a) for a in vec]
        for lead, pivot in self._pivots:
            if v[lead] != 0:
                f = F.div(v[lead], pivot[lead])
                v = [F.sub(a, F.mul(f, b)) for a, b in zip(v, pivot)]
        return v

    def add(self, vec: Sequence) -> bool:
        v = self.reduce(vec)
        for i, a in enumerate(v):
            if a != 0:
                self._pivots.append((i, v))
                return True
        return False


def solve_columns(cols: Sequence[Sequence], target: Sequence, field: Field) -> list[Scalar] | None:
    """Exact coefficients x with sum_j x[j] * cols[j] == target, or None.

    Returns the solution the deterministic elimination finds (free
    coefficients set to zero).
    """
    F = field
    # pivot invariant: pvec == sum_i pcombo[i] * cols[i]
    pivots: list[tuple[int, list[Scalar], dict[int, Scalar]]] = []
    for j, col in enumerate(cols):
        vec = [F.of(a) for a in col]
        combo: dict[int, Scalar] = {j: F.one}
        for lead, pvec, pcombo in pivots:
            if vec[lead] != 0:
                f = F.div(vec[lead], pvec[lead])
                vec = [F.sub(a, F.mul(f, b)) for a, b in zip(vec, pvec)]
                for i, c in pcombo.items():
                    combo[i] = F.sub(combo.get(i, F.zero), F.mul(f, c))
        lead = next((i for i, a in enumerate(vec) if a != 0), None)
        if lead is not None:
            pivots.append((lead, vec, combo))

    # residual invariant: vec == target - sum_i mu[i] * cols[i]
    vec = [F.of(a) for a in target]
    mu: dict[int, Scalar] = {}
    for lead, pvec, pcombo in pivots:
        if vec[lead] != 0:
            f = F.div(vec[lead], pvec[lead])
            vec = [F.sub(a, F.mul(f, b)) for a, b in zip(vec, pvec)]
            for i, c in pcombo.items():
                mu[i] = F.add(mu.get(i, F.zero), F.mul(f, c))
    if any(a != 0 for a in vec):
        return None
    out = [F.zero] * len(cols)
    for i, c in mu.items():
        out[i] = c
    return out
