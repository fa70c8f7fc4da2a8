import pytest

from simatroid import (ChainVector, GF, GF2, QQ, boundary, boundary_matrix, build_complex,
                      coboundary, face, full_complex, gen_random, instance_complex, vertices)
from simatroid.complexes import all_faces, incidence


def test_boundary_sign_convention():
    c = full_complex(4, 3)
    b = boundary(c, face(1, 2, 3), QQ)
    assert b.coeff(face(2, 3)) == -1
    assert b.coeff(face(1, 3)) == 1
    assert b.coeff(face(1, 2)) == -1
    assert b.coeff(face(1, 4)) == 0
    # over GF(2) the signs collapse to indicators
    b2 = boundary(c, face(1, 2, 3), GF2)
    assert all(a == 1 for _, a in b2.items_lex())


def test_boundary_of_boundary_is_zero():
    for field in (GF2, GF(3), QQ):
        for seed in range(8):
            inst = gen_random(6, 3, "3/5", 600 + seed)
            c = instance_complex(inst)
            for apex in c.skeleton(4):
                outer = boundary(c, apex, field)
                total = ChainVector(field)
                for f, a in outer.items_lex():
                    total = total.add_scaled(boundary(c, f, field), a)
                assert total.is_zero()


def test_boundary_rejects_non_faces():
    c = build_complex(4, 2, [(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        boundary(c, face(1, 3), QQ)  # 13 is not a face
    with pytest.raises(ValueError):
        boundary(c, face(2), QQ)


def test_coboundary_is_signed_star():
    c = build_complex(5, 3, [(1, 2, 3), (1, 2, 4), (1, 2, 5), (3, 4, 5)])
    v = face(1, 2)
    cb = coboundary(c, v, GF(5))
    assert cb.support == c.star(v)
    for f, a in cb.items_lex():
        assert a == GF(5).of(incidence(v, f))
    with pytest.raises(ValueError):
        coboundary(c, face(1, 2, 3), GF(5))


def test_boundary_matrix_grid():
    c = build_complex(4, 2, [(1, 2), (1, 3), (2, 3), (3, 4)])
    bm = boundary_matrix(c, QQ)
    assert bm.row_faces == tuple(all_faces(4, 1))
    assert [vertices(f) for f in bm.col_faces] == [(1, 2), (1, 3), (2, 3), (3, 4)]
    for i, v in enumerate(bm.row_faces):
        for j, f in enumerate(bm.col_faces):
            assert bm.matrix.entry(i, j) == incidence(v, f)
    assert bm.column_chain(face(1, 2)) == boundary(c, face(1, 2), QQ)
    assert bm.row_chain(face(3)) == coboundary(c, face(3), QQ)


def test_chain_vector_arithmetic():
    F = GF(7)
    a = ChainVector(F, {face(1, 2): 3, face(1, 3): 5})
    b = ChainVector(F, {face(1, 2): 4, face(2, 3): 1})
    s = a.add(b)
    assert s.coeff(face(1, 2)) == 0 and face(1, 2) not in s.support
    assert s.coeff(face(1, 3)) == 5 and s.coeff(face(2, 3)) == 1
    assert a.scale(2).coeff(face(1, 3)) == 3
    assert a.add_scaled(b, 5).coeff(face(1, 2)) == F.of(3 + 20)
    assert a.neg().add(a).is_zero()
    assert a.restrict([face(1, 2)]).support == {face(1, 2)}
    assert a.dense([face(1, 3), face(2, 3), face(1, 2)]) == (5, 0, 3)
    assert len(a) == 2


def test_chain_vector_accumulates_pairs():
    F = QQ
    v = ChainVector(F, [(face(1, 2), 1), (face(1, 2), -1), (face(1, 3), 2)])
    assert v.support == {face(1, 3)}


def test_chain_vector_field_mismatch():
    a = ChainVector(GF2, {face(1, 2): 1})
    b = ChainVector(QQ, {face(1, 2): 1})
    with pytest.raises(ValueError):
        a.add(b)
    assert a != b


def test_chain_vector_equality_and_hash():
    x = ChainVector(GF(3), {face(1, 2): -1})
    y = ChainVector(GF(3), {face(1, 2): 2})
    assert x == y and hash(x) == hash(y)
