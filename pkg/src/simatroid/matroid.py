"""The linear matroid of boundary columns of a complex's k-faces.

Ground set: the k-faces in lexicographic order.  Rank queries are cached
per subset; over GF(2) columns are packed into machine integers and
reduced by xor, other fields use generic exact elimination.  Restriction
to a subset of the ground set is just a rank query on that subset, so
every "residual matroid" question below is phrased through rank_of.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .chains import BoundaryMatrix, ChainVector, boundary, boundary_matrix, coboundary
from .complexes import HypercliqueComplex, all_faces, face_sort_key, full_complex, sorted_faces, vertices
from .errors import GuardExceeded
from .fields import Field, Scalar
from .linalg import IncrementalRank

DEFAULT_BRUTE_GROUND = 22
DEFAULT_DUALITY_N = 7
DEFAULT_SPAN_LIMIT = 1 << 22


@dataclass(frozen=True)
class SmallCircuit:
    """Boundary of a (k+1)-face: its support is always a (k+1)-element circuit."""

    apex: int
    members: frozenset[int]
    vector: ChainVector


class SimplicialMatroid:
    def __init__(self, complex: HypercliqueComplex, field: Field):
        self.complex = complex
        self.field = field
        self.ground: tuple[int, ...] = tuple(sorted_faces(complex.faces_k))
        self._ground_set = frozenset(self.ground)
        rows = all_faces(complex.n, complex.k - 1)
        row_pos = {v: i for i, v in enumerate(rows)}
        self._nrows = len(rows)
        self._gf2 = field.p == 2
        self._cols: dict[int, object] = {}
        for f in self.ground:
            chain = boundary(complex, f, field)
            if self._gf2:
                col = 0
                for v in chain.support:
                    col |= 1 << row_pos[v]
            else:
                col = [field.zero] * self._nrows
                for v, a in chain.items_lex():
                    col[row_pos[v]] = a
                col = tuple(col)
            self._cols[f] = col
        self._rank_cache: dict[frozenset[int], int] = {}

    def __repr__(self) -> str:
        return f"SimplicialMatroid({self.complex!r}, {self.field})"

    @cached_property
    def boundary_matrix(self) -> BoundaryMatrix:
        return boundary_matrix(self.complex, self.field)

    @property
    def rank(self) -> int:
        return self.rank_of(self.ground)

    def _check_subset(self, subset: Iterable[int]) -> frozenset[int]:
        fs = frozenset(subset)
        if not fs <= self._ground_set:
            bad = next(iter(fs - self._ground_set))
            raise ValueError(f"{vertices(bad)} is not in the ground set")
        return fs

    def rank_of(self, subset: Iterable[int]) -> int:
        fs = self._check_subset(subset)
        cached = self._rank_cache.get(fs)
        if cached is not None:
            return cached
        cols = [self._cols[f] for f in sorted(fs, key=face_sort_key)]
        if self._gf2:
            piv: dict[int, int] = {}
            for v in cols:
                while v:
                    low = v & -v
                    p = piv.get(low)
                    if p is None:
                        piv[low] = v
                        break
                    v ^= p
            r = len(piv)
        else:
            inc = IncrementalRank(self.field)
            for col in cols:
                inc.add(col)
            r = inc.rank
        self._rank_cache[fs] = r
        return r

    def is_independent(self, subset: Iterable[int]) -> bool:
        fs = self._check_subset(subset)
        return self.rank_of(fs) == len(fs)

    def closure(self, subset: Iterable[int]) -> frozenset[int]:
        fs = self._check_subset(subset)
        r = self.rank_of(fs)
        return frozenset(e for e in self.ground
                         if e in fs or self.rank_of(fs | {e}) == r)

    def is_cocircuit(self, candidate: Iterable[int]) -> bool:
        return self.is_cocircuit_within(self._ground_set, candidate)

    def is_cocircuit_within(self, ground_subset: Iterable[int], candidate: Iterable[int]) -> bool:
        """Is candidate a cocircuit of the restriction to ground_subset?

        Characterization used: the complement of a cocircuit inside its
        ground set is a flat of rank one less than the restriction.
        """
        sub = self._check_subset(ground_subset)
        cand = self._check_subset(candidate)
        if not cand or not cand <= sub:
            return False
        h = sub - cand
        r_sub = self.rank_of(sub)
        if self.rank_of(h) != r_sub - 1:
            return False
        return all(self.rank_of(h | {e}) == r_sub for e in cand)

    def small_circuits(self) -> tuple[SmallCircuit, ...]:
        out = []
        for apex in sorted_faces(self.complex.skeleton(self.complex.k + 1)):
            vec = boundary(self.complex, apex, self.field)
            out.append(SmallCircuit(apex=apex, members=vec.support, vector=vec))
        return tuple(out)

    def circuits_brute(self, max_size: int | None = None,
                       max_ground: int = DEFAULT_BRUTE_GROUND) -> list[frozenset[int]]:
        """All circuits of at most max_size elements, smallest first.

        Depth-first search over independent subsets in lexicographic
        order; each dependent single-element extension yields its unique
        fundamental circuit.  Refuses when the ground set exceeds
        max_ground.
        """
        g = self.ground
        if len(g) > max_ground:
            raise GuardExceeded(
                f"circuit enumeration over {len(g)} elements exceeds the guard of {max_ground}")
        if max_size is None:
            max_size = len(g)
        found: set[frozenset[int]] = set()
        if max_size < 1 or not g:
            return []
        if self._gf2:
            self._circuits_gf2(found, max_size)
        else:
            self._circuits_generic(found, max_size)
        return sorted(found, key=lambda c: (len(c), sorted(map(face_sort_key, c))))

    def _circuits_gf2(self, found: set, max_size: int) -> None:
        g = self.ground
        shift = self._nrows
        rowmask = (1 << shift) - 1
        cols = [self._cols[f] | (1 << (shift + i)) for i, f in enumerate(g)]
        piv: dict[int, int] = {}

        def dfs(start: int, size: int) -> None:
            for i in range(start, len(g)):
                v = cols[i]
                low = 0
                while v & rowmask:
                    real = v & rowmask
                    low = real & -real
                    p = piv.get(low)
                    if p is None:
                        break
                    v ^= p
                if not (v & rowmask):
                    tags = v >> shift
                    found.add(frozenset(g[j] for j in _bit_indices(tags)))
                elif size + 1 < max_size:
                    piv[low] = v
                    dfs(i + 1, size + 1)
                    del piv[low]

        dfs(0, 0)

    def _circuits_generic(self, found: set, max_size: int) -> None:
        F = self.field
        g = self.ground
        pivots: list[tuple[int, list[Scalar], dict[int, Scalar]]] = []

        def dfs(start: int, size: int) -> None:
            for i in range(start, len(g)):
                vec = list(self._cols[g[i]])
                combo: dict[int, Scalar] = {i: F.one}
                for lead, pvec, pcombo in pivots:
                    if vec[lead] != 0:
                        f = F.div(vec[lead], pvec[lead])
                        vec = [F.sub(a, F.mul(f, b)) for a, b in zip(vec, pvec)]
                        for j, c in pcombo.items():
                            combo[j] = F.sub(combo.get(j, F.zero), F.mul(f, c))
                lead = next((idx for idx, a in enumerate(vec) if a != 0), None)
                if lead is None:
                    found.add(frozenset(g[j] for j, c in combo.items() if c != 0))
                elif size + 1 < max_size:
                    pivots.append((lead, vec, combo))
                    dfs(i + 1, size + 1)
                    pivots.pop()

        dfs(0, 0)

    def cocircuit_space_basis(self) -> list[ChainVector]:
        """Greedy independent subfamily of the nonzero (k-1)-set stars, lex order."""
        target = self.rank
        basis: list[ChainVector] = []
        inc = IncrementalRank(self.field)
        for v in all_faces(self.complex.n, self.complex.k - 1):
            if len(basis) == target:
                break
            vec = coboundary(self.complex, v, self.field)
            if vec.is_zero():
                continue
            if inc.add(vec.dense(self.ground)):
                basis.append(vec)
        return basis


def _bit_indices(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _minimal_supports(masks: Iterable[int]) -> list[int]:
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    minimal: list[int] = []
    for m in ordered:
        if not any(acc & m == acc for acc in minimal):
            minimal.append(m)
    return minimal


def _iter_span_vectors(basis: Sequence[Sequence[Scalar]], field: Field, width: int):
    """Every vector in the linear span, the zero vector included, as lists."""
    if not basis:
        yield [field.zero] * width
        return

    def rec(i: int, acc: list):
        if i == len(basis):
            yield acc
            return
        cur = acc
        yield from rec(i + 1, cur)
        for _ in range(1, field.p):
            cur = [field.add(a, b) for a, b in zip(cur, basis[i])]
            yield from rec(i + 1, cur)

    yield from rec(0, [field.zero] * width)


def _span_supports(basis: Sequence[Sequence[Scalar]], field: Field, limit: int) -> set[int]:
    if field.p is None:
        raise ValueError("span enumeration needs a finite field")
    if field.p ** len(basis) > limit:
        raise GuardExceeded(
            f"span of dimension {len(basis)} over {field} exceeds the enumeration guard")
    width = len(basis[0]) if basis else 0
    out: set[int] = set()
    for vec in _iter_span_vectors(basis, field, width):
        m = 0
        for i, a in enumerate(vec):
            if a != 0:
                m |= 1 << i
        if m:
            out.add(m)
    return out


def matroid_circuits_exhaustive(m: SimplicialMatroid, limit: int = DEFAULT_SPAN_LIMIT) -> set[frozenset[int]]:
    """The full circuit family.

    Over a finite field the minimal supports of the nullspace are
    enumerated exhaustively; over the rationals this falls back to
    subset brute force.
    """
    if m.field.is_finite:
        basis = m.boundary_matrix.matrix.nullspace_basis()
        supports = _span_supports(basis, m.field, limit)
        return {frozenset(m.ground[i] for i in _bit_indices(s))
                for s in _minimal_supports(supports)}
    return set(m.circuits_brute())


def matroid_cocircuits_exhaustive(m: SimplicialMatroid, limit: int = DEFAULT_SPAN_LIMIT) -> set[frozenset[int]]:
    """The full cocircuit family: minimal supports of the row space."""
    if m.field.is_finite:
        _, rows = m.boundary_matrix.matrix.rref()
        basis = [r for r in rows if any(a != 0 for a in r)]
        supports = _span_supports(basis, m.field, limit)
        return {frozenset(m.ground[i] for i in _bit_indices(s))
                for s in _minimal_supports(supports)}
    if 2 ** len(m.ground) > limit:
        raise GuardExceeded("cocircuit enumeration over the rationals exceeds the guard")
    out = set()
    for size in range(1, len(m.ground) + 1):
        for cand in itertools.combinations(m.ground, size):
            if m.is_cocircuit(cand):
                out.add(frozenset(cand))
    return out


def verify_full_duality(n: int, k: int, field: Field,
                        max_n: int = DEFAULT_DUALITY_N,
                        limit: int = DEFAULT_SPAN_LIMIT) -> bool:
    """Complementation maps the circuits of the full (n-k)-matroid onto the
    cocircuits of the full k-matroid on [n].  Both families are computed
    exhaustively and compared as sets."""
    if not (2 <= k <= n - 2):
        raise ValueError(f"duality check needs 2 <= k <= n - 2, got n={n}, k={k}")
    if n > max_n:
        raise GuardExceeded(f"duality check for n={n} exceeds the guard of {max_n}")
    m_k = SimplicialMatroid(full_complex(n, k), field)
    m_nk = SimplicialMatroid(full_complex(n, n - k), field)
    full_mask = (1 << n) - 1
    circuits = matroid_circuits_exhaustive(m_nk, limit)
    cocircuits = matroid_cocircuits_exhaustive(m_k, limit)
    mapped = {frozenset(full_mask ^ x for x in c) for c in circuits}
    return mapped == cocircuits
