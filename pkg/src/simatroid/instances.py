"""Plain-text instances: a header line "n k", an optional "field" line,
then one k-face per line as strictly increasing vertex numbers.

    # two triangles sharing an edge
    4 3
    field 2
    1 2 3
    1 2 4

"#" starts a comment and blank lines are ignored.  Writing is canonical:
header, field line, faces in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import HypercliqueComplex, all_faces, face_of, face_text, sorted_faces
from .errors import ParseError
from .fields import GF, GF2, QQ, Field

LCG_MULT = 6364136223846793005
LCG_INC = 1442695040888963407
MASK64 = (1 << 64) - 1
MAX_RANDOM_N = 12


@dataclass(frozen=True)
class Instance:
    n: int
    k: int
    faces: tuple[int, ...]
    field: Field


def instance_complex(inst: Instance) -> HypercliqueComplex:
    return HypercliqueComplex(inst.n, inst.k, frozenset(inst.faces))


def field_from_token(token: str) -> Field:
    """"q" for the rationals, otherwise a prime characteristic."""
    if token.lower() == "q":
        return QQ
    try:
        p = int(token)
    except ValueError:
        raise ValueError(f"field must be a prime or 'q', got {token!r}") from None
    try:
        return GF(p)
    except ValueError:
        raise ValueError(f"{p} is not prime") from None


def parse_instance(text: str) -> Instance:
    n = k = None
    field: Field | None = None
    faces: list[int] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2:
                raise ParseError("header must be 'n k'", line=lineno)
            try:
                n, k = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError("header must be two integers", line=lineno) from None
            if not 1 <= n <= 64:
                raise ParseError(f"n must be between 1 and 64, got {n}", line=lineno)
            if not 2 <= k <= n:
                raise ParseError(f"k must be between 2 and n, got {k}", line=lineno)
            continue
        if tokens[0] == "field":
            if field is not None:
                raise ParseError("duplicate field line", line=lineno)
            if faces:
                raise ParseError("field line must come before the faces", line=lineno)
            if len(tokens) != 2:
                raise ParseError("field line must be 'field p' or 'field q'", line=lineno)
            try:
                field = field_from_token(tokens[1])
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno) from None
            continue
        try:
            verts = [int(t) for t in tokens]
        except ValueError:
            raise ParseError(f"face vertices must be integers: {line!r}", line=lineno) from None
        if len(verts) != k:
            raise ParseError(f"expected {k} vertices, got {len(verts)}", line=lineno)
        if any(b <= a for a, b in zip(verts, verts[1:])):
            raise ParseError("vertices must be strictly increasing", line=lineno)
        if verts[0] < 1 or verts[-1] > n:
            raise ParseError(f"vertex out of range 1..{n}", line=lineno)
        mask = face_of(verts)
        if mask in seen:
            raise ParseError(f"duplicate face {' '.join(map(str, verts))}", line=lineno)
        seen.add(mask)
        faces.append(mask)
    if n is None:
        raise ParseError("empty instance: missing 'n k' header")
    return Instance(n=n, k=k, faces=tuple(sorted_faces(faces)),
                    field=field if field is not None else GF2)


def write_instance(inst: Instance) -> str:
    lines = [f"{inst.n} {inst.k}"]
    lines.append("field q" if not inst.field.is_finite else f"field {inst.field.p}")
    lines.extend(face_text(f) for f in sorted_faces(inst.faces))
    return "\n".join(lines) + "\n"


def gen_random(n: int, k: int, density, seed: int, field: Field = GF2) -> Instance:
    """Reproducible random instance: one fixed-increment LCG step per k-set,
    taken in lexicographic order, kept when state/2^64 < density.  The
    comparison is exact, so equal seeds give equal instances on every
    platform."""
    if not 2 <= k <= n <= MAX_RANDOM_N:
        raise ValueError(f"need 2 <= k <= n <= {MAX_RANDOM_N}")
    density = Fraction(density)
    if not 0 < density <= 1:
        raise ValueError(f"density must be in (0, 1], got {density}")
    state = seed & MASK64
    faces = []
    for mask in all_faces(n, k):
        state = (state * LCG_MULT + LCG_INC) & MASK64
        if state * density.denominator < density.numerator << 64:
            faces.append(mask)
    return Instance(n=n, k=k, faces=tuple(faces), field=field)
