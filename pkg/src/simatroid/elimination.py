"""Simplicial (k-1)-faces and elimination-style structure certificates.

A (k-1)-face is simplicial when exactly one facet strictly contains it.
Peeling the star of a simplicial face removes a cocircuit of the
matroid, so a complete peel sequence is a certified analogue of a
perfect elimination ordering; the superdense chain is the matching
lattice object, validated here with rank arithmetic instead of facet
arithmetic so the two notions are checked by different machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .chains import ChainVector, coboundary
from .complexes import HypercliqueComplex, all_faces, submasks_of_size, vertices
from .errors import CertificateError, GuardExceeded
from .fields import GF2, Field
from .linalg import IncrementalRank
from .matroid import SimplicialMatroid

DEFAULT_ORACLE_GROUND = 10


def is_simplicial_face(c: HypercliqueComplex, v: int) -> bool:
    """True iff exactly one facet strictly contains the (k-1)-set v.

    Decided without enumerating facets: v is simplicial iff the union of
    its star is a face and is itself a facet; a (k-1)-set with an empty
    star is a facet in its own right, hence never simplicial.
    """
    if v.bit_count() != c.k - 1:
        raise ValueError("simpliciality is defined for (k-1)-element faces")
    if v & ~((1 << c.n) - 1):
        raise ValueError("vertex out of range")
    st = c.star(v)
    if not st:
        return False
    union = v
    for f in st:
        union |= f
    if not c.is_face(union):
        return False
    return not c.extension_vertices(union)


def simplicial_faces(c: HypercliqueComplex) -> list[int]:
    return [v for v in all_faces(c.n, c.k - 1) if is_simplicial_face(c, v)]


@dataclass(frozen=True)
class DPerfectCertificate:
    """A complete simplicial peel: sequence of (k-1)-faces plus the star
    each one removed.  The removed stars partition the k-faces and each
    is a cocircuit of the residual matroid at its step."""

    sequence: tuple[int, ...]
    cocircuits: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.sequence)


def verify_dperfect(c: HypercliqueComplex, field: Field, cert: DPerfectCertificate) -> None:
    m = SimplicialMatroid(c, field)
    r = m.rank
    if len(cert.sequence) != r or len(cert.cocircuits) != len(cert.sequence):
        raise CertificateError(f"sequence length {len(cert.sequence)} != rank {r}")
    residual = frozenset(m.ground)
    for step, (v, claimed) in enumerate(zip(cert.sequence, cert.cocircuits), start=1):
        if v.bit_count() != c.k - 1:
            raise CertificateError(f"step {step}: entry is not a (k-1)-element face")
        comp = HypercliqueComplex(c.n, c.k, residual)
        if not is_simplicial_face(comp, v):
            raise CertificateError(
                f"step {step}: {vertices(v)} is not simplicial in the residual complex")
        st = comp.star(v)
        if st != claimed:
            raise CertificateError(f"step {step}: recorded cocircuit does not match the star")
        if not m.is_cocircuit_within(residual, st):
            raise CertificateError(f"step {step}: star is not a cocircuit of the residual")
        if m.rank_of(residual - st) != m.rank_of(residual) - 1:
            raise CertificateError(f"step {step}: rank did not drop by exactly one")
        residual = residual - st
    if residual:
        raise CertificateError("peel did not exhaust the k-faces")


def _peel_search(c: HypercliqueComplex, exhaustive: bool) -> list[tuple[int, frozenset[int]]] | None:
    """Depth-first search over simplicial peels, lex-first at every step.

    With exhaustive=False only the greedy branch is followed.  For k = 2
    a single maximal peel is decisive either way: eliminating any
    simplicial vertex of a chordal graph leaves a chordal graph, so the
    greedy dive cannot dead-end unless every dive does.
    """
    n, k = c.n, c.k
    failed: set[frozenset[int]] = set()
    candidates_memo: dict[frozenset[int], list[tuple[int, frozenset[int]]]] = {}

    def candidates(faces: frozenset[int]) -> list[tuple[int, frozenset[int]]]:
        got = candidates_memo.get(faces)
        if got is None:
            comp = HypercliqueComplex(n, k, faces)
            got = [(v, comp.star(v)) for v in simplicial_faces(comp)]
            candidates_memo[faces] = got
        return got

    greedy_only = (not exhaustive) or k == 2

    def dfs(faces: frozenset[int], acc: list) -> list | None:
        if not faces:
            return acc
        if faces in failed:
            return None
        for v, st in candidates(faces):
            result = dfs(faces - st, acc + [(v, st)])
            if result is not None:
                return result
            if greedy_only:
                break
        failed.add(faces)
        return None

    return dfs(frozenset(c.faces_k), [])


def find_dperfect_sequence(c: HypercliqueComplex, field: Field = GF2,
                           strategy: str = "backtrack") -> DPerfectCertificate | None:
    """Search for a complete simplicial peel and return a verified certificate.

    strategy "backtrack" is exhaustive: None means no such sequence
    exists.  strategy "greedy" follows the lex-first candidate only, so
    None is merely inconclusive (except for k = 2, where one maximal
    peel decides).
    """
    if strategy not in ("backtrack", "greedy"):
        raise ValueError(f"unknown strategy {strategy!r}")
    steps = _peel_search(c, exhaustive=(strategy == "backtrack"))
    if steps is None:
        return None
    cert = DPerfectCertificate(sequence=tuple(v for v, _ in steps),
                               cocircuits=tuple(st for _, st in steps))
    verify_dperfect(c, field, cert)
    return cert


def check_basic_linear_sequence(c: HypercliqueComplex, field: Field,
                                seq: Sequence[int]) -> bool:
    """Does peeling the residual stars of seq remove one cocircuit per step
    and exhaust a ground set of rank len(seq)?"""
    m = SimplicialMatroid(c, field)
    if len(seq) != m.rank:
        return False
    residual = frozenset(m.ground)
    for v in seq:
        if v.bit_count() != c.k - 1:
            raise ValueError("sequence entries must be (k-1)-element faces")
        st = frozenset(f for f in residual if f & v == v)
        if not st or not m.is_cocircuit_within(residual, st):
            return False
        residual = residual - st
    assert not residual, "rank bookkeeping broke: peels exhausted the rank but not the ground set"
    return True


def cocircuit_space_basis_from_sequence(c: HypercliqueComplex, field: Field,
                                        seq: Sequence[int]) -> list[ChainVector]:
    """The stars of a valid sequence, as a basis of the cocircuit space."""
    if not check_basic_linear_sequence(c, field, seq):
        raise ValueError("not a valid peel sequence for this complex and field")
    m = SimplicialMatroid(c, field)
    vecs = [coboundary(c, v, field) for v in seq]
    inc = IncrementalRank(field)
    matrix = m.boundary_matrix.matrix
    for vec in vecs:
        dense = vec.dense(m.ground)
        if not matrix.in_row_space(dense, field=field):
            raise AssertionError("a star fell outside the row space")
        if not inc.add(dense):
            raise AssertionError("stars of a valid sequence must be independent")
    return vecs


def check_chordal_graph(edges: Iterable, n: int) -> bool:
    """Perfect-elimination test on plain adjacency sets; no matroid machinery.

    edges may be vertex pairs or 2-element masks.
    """
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for e in edges:
        a, b = vertices(e) if isinstance(e, int) else tuple(e)
        if not (1 <= a <= n and 1 <= b <= n and a != b):
            raise ValueError(f"bad edge ({a}, {b})")
        adj[a].add(b)
        adj[b].add(a)
    active = set(range(1, n + 1))
    while active:
        pick = None
        for v in sorted(active):
            nb = adj[v] & active
            if all(y in adj[x] for x in nb for y in nb if x < y):
                pick = v
                break
        if pick is None:
            return False
        active.remove(pick)
    return True


def is_dense_hyperplane(m: SimplicialMatroid, h: Iterable[int]) -> bool:
    """Is h a hyperplane whose complement is the star of a simplicial (k-1)-face?"""
    hs = frozenset(m._check_subset(h))
    ground = frozenset(m.ground)
    if hs == ground:
        return False
    removed = ground - hs
    r = m.rank
    if m.rank_of(hs) != r - 1:
        return False
    if not all(m.rank_of(hs | {e}) == r for e in removed):
        return False
    common = (1 << m.complex.n) - 1
    for f in removed:
        common &= f
    for v in submasks_of_size(common, m.complex.k - 1):
        if m.complex.star(v) == removed and is_simplicial_face(m.complex, v):
            return True
    return False


@dataclass(frozen=True)
class SuperdenseCertificate:
    """Maximal chain of flats, ascending from empty to the full ground set,
    with the simplicial witness that makes each step a dense hyperplane
    of the restriction above it."""

    chain: tuple[frozenset[int], ...]
    witnesses: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.witnesses)


def verify_superdense(m: SimplicialMatroid, cert: SuperdenseCertificate) -> None:
    r = m.rank
    if len(cert.chain) != r + 1 or len(cert.witnesses) != r:
        raise CertificateError(f"chain length {len(cert.chain)} != rank + 1 = {r + 1}")
    if cert.chain[0] != frozenset():
        raise CertificateError("chain must start at the empty flat")
    if cert.chain[-1] != frozenset(m.ground):
        raise CertificateError("chain must end at the full ground set")
    for i in range(r):
        below, above = cert.chain[i], cert.chain[i + 1]
        if not below < above:
            raise CertificateError(f"step {i + 1}: chain is not strictly increasing")
        v = cert.witnesses[i]
        if v.bit_count() != m.complex.k - 1:
            raise CertificateError(f"step {i + 1}: witness is not a (k-1)-element face")
        comp = HypercliqueComplex(m.complex.n, m.complex.k, above)
        if not is_simplicial_face(comp, v):
            raise CertificateError(
                f"step {i + 1}: witness {vertices(v)} is not simplicial in the restriction")
        st = comp.star(v)
        if above - st != below:
            raise CertificateError(f"step {i + 1}: flat is not the complement of the witness star")
        r_above = m.rank_of(above)
        if m.rank_of(below) != r_above - 1:
            raise CertificateError(f"step {i + 1}: lower flat does not have corank one")
        if any(m.rank_of(below | {e}) != r_above for e in st):
            raise CertificateError(f"step {i + 1}: lower set is not a flat of the restriction")


def check_superdense(m: SimplicialMatroid) -> SuperdenseCertificate | None:
    """Exhaustive top-down search for a maximal chain of relatively dense flats.

    Every candidate step is validated by rank arithmetic (corank one,
    flat in the restriction), independently of the cocircuit reasoning
    in the peel search.  None is definitive.
    """
    n, k = m.complex.n, m.complex.k
    failed: set[frozenset[int]] = set()
    greedy_only = k == 2

    def dfs(x: frozenset[int]) -> list[tuple[frozenset[int], int]] | None:
        if not x:
            return []
        if x in failed:
            return None
        comp = HypercliqueComplex(n, k, x)
        r_x = m.rank_of(x)
        for v in simplicial_faces(comp):
            st = comp.star(v)
            h = x - st
            if m.rank_of(h) != r_x - 1 or any(m.rank_of(h | {e}) != r_x for e in st):
                raise AssertionError("star of a simplicial face was not a dense hyperplane")
            tail = dfs(h)
            if tail is not None:
                return [(h, v)] + tail
            if greedy_only:
                break
        failed.add(x)
        return None

    top = frozenset(m.ground)
    steps = dfs(top)
    if steps is None:
        return None
    chain = [top] + [h for h, _ in steps]
    witnesses = [v for _, v in steps]
    cert = SuperdenseCertificate(chain=tuple(reversed(chain)),
                                 witnesses=tuple(reversed(witnesses)))
    verify_superdense(m, cert)
    return cert


def supersolvable_modular_chain(m: SimplicialMatroid,
                                max_ground: int = DEFAULT_ORACLE_GROUND) -> bool:
    """Brute-force search for a maximal chain of modular flats.

    Flats are enumerated by closure saturation; modularity of a flat X
    is tested against every flat Y via r(X) + r(Y) == r(X u Y) + r(X n Y)
    (the intersection of flats is a flat, and closures preserve rank).
    """
    if len(m.ground) > max_ground:
        raise GuardExceeded(
            f"modular-chain search over {len(m.ground)} elements exceeds the guard of {max_ground}")
    bottom = m.closure(frozenset())
    flats: set[frozenset[int]] = {bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for flat in frontier:
            for e in m.ground:
                if e in flat:
                    continue
                bigger = m.closure(flat | {e})
                if bigger not in flats:
                    flats.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    by_rank: dict[int, list[frozenset[int]]] = {}
    for flat in flats:
        by_rank.setdefault(m.rank_of(flat), []).append(flat)
    modular_cache: dict[frozenset[int], bool] = {}

    def modular(x: frozenset[int]) -> bool:
        got = modular_cache.get(x)
        if got is None:
            rx = m.rank_of(x)
            got = all(rx + m.rank_of(y) == m.rank_of(x | y) + m.rank_of(x & y)
                      for y in flats)
            modular_cache[x] = got
        return got

    r = m.rank
    dead: set[frozenset[int]] = set()

    def climb(x: frozenset[int], level: int) -> bool:
        if level == r:
            return True
        if x in dead:
            return False
        for y in by_rank.get(level + 1, ()):
            if x < y and modular(y) and climb(y, level + 1):
                return True
        dead.add(x)
        return False

    return modular(bottom) and climb(bottom, m.rank_of(bottom))


def check_supersolvable(m: SimplicialMatroid,
                        max_ground: int = DEFAULT_ORACLE_GROUND) -> bool:
    """For k > 2 a matroid here is supersolvable iff it has no circuits, so
    the answer is a rank comparison.  For k = 2 the modular-chain search
    decides, within its guard."""
    if m.complex.k > 2:
        return m.rank == len(m.ground)
    return supersolvable_modular_chain(m, max_ground=max_ground)
