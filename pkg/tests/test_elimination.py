import itertools

import pytest

from conftest import EXAMPLE3_SEQUENCE, EXAMPLE3_TRIPLES, seq_masks

from simatroid import (CertificateError, DPerfectCertificate, GF2, GuardExceeded,
                      HypercliqueComplex, QQ,
                      SimplicialMatroid, SuperdenseCertificate, build_complex,
                      check_basic_linear_sequence, check_chordal_graph, check_superdense,
                      check_supersolvable, cocircuit_space_basis_from_sequence, face,
                      find_dperfect_sequence, gen_random, instance_complex,
                      is_dense_hyperplane, is_simplicial_face, simplicial_faces,
                      supersolvable_modular_chain, verify_dperfect, verify_superdense,
                      vertices)
from simatroid.complexes import all_faces

CHORD4 = [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]  # 4-cycle with chord 13


def small_complexes(count, n, k, base_seed, density="1/2"):
    return [instance_complex(gen_random(n, k, density, base_seed + i)) for i in range(count)]


def peel_oracle(c):
    """Exhaustive peel search with no memoization and no shortcuts."""
    def rec(faces):
        if not faces:
            return True
        comp = HypercliqueComplex(c.n, c.k, faces)
        for v in simplicial_faces(comp):
            if rec(faces - comp.star(v)):
                return True
        return False
    return rec(frozenset(c.faces_k))


def test_simplicial_face_against_facet_count():
    for c in small_complexes(10, 6, 2, 20) + small_complexes(10, 6, 3, 60, "11/20"):
        for v in all_faces(c.n, c.k - 1):
            containing = [f for f in c.facets if f & v == v and f != v]
            assert is_simplicial_face(c, v) == (len(containing) == 1)


def test_simplicial_vertex_is_clique_neighborhood():
    for c in small_complexes(12, 7, 2, 90, "2/5"):
        adj = {u: set() for u in range(1, 8)}
        for e in c.faces_k:
            a, b = vertices(e)
            adj[a].add(b)
            adj[b].add(a)
        for u in range(1, 8):
            nb = sorted(adj[u])
            clique = all(face(x, y) in c.faces_k for x, y in itertools.combinations(nb, 2))
            expect = bool(nb) and clique
            assert is_simplicial_face(c, face(u)) == expect


def test_backtrack_matches_exhaustive_oracle():
    for c in small_complexes(25, 5, 2, 150) + small_complexes(25, 6, 3, 180, "11/20"):
        cert = find_dperfect_sequence(c, GF2)
        assert (cert is not None) == peel_oracle(c)
        if cert is not None:
            verify_dperfect(c, GF2, cert)
            # peels partition the k-faces
            union = set()
            for st in cert.cocircuits:
                assert not (union & st)
                union |= st
            assert union == set(c.faces_k)


def test_greedy_strategy():
    c = build_complex(4, 2, CHORD4)
    cert = find_dperfect_sequence(c, QQ, strategy="greedy")
    assert cert is not None and len(cert) == 3
    with pytest.raises(ValueError):
        find_dperfect_sequence(c, QQ, strategy="nope")
    # non-chordal graph: greedy is still decisive for k = 2
    c4 = build_complex(4, 2, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert find_dperfect_sequence(c4, GF2, strategy="greedy") is None
    assert find_dperfect_sequence(c4, GF2) is None


def test_verify_dperfect_rejects_corruption():
    c = build_complex(4, 2, CHORD4)
    cert = find_dperfect_sequence(c, GF2)
    with pytest.raises(CertificateError):
        verify_dperfect(c, GF2, DPerfectCertificate(cert.sequence[:-1], cert.cocircuits[:-1]))
    with pytest.raises(CertificateError):
        verify_dperfect(c, GF2, DPerfectCertificate(tuple(reversed(cert.sequence)),
                                                    tuple(reversed(cert.cocircuits))))
    bad_star = (frozenset({face(1, 2)}),) + cert.cocircuits[1:]
    with pytest.raises(CertificateError):
        verify_dperfect(c, GF2, DPerfectCertificate(cert.sequence, bad_star))
    with pytest.raises(CertificateError):
        verify_dperfect(c, GF2, DPerfectCertificate((face(1, 2, 3),) + cert.sequence[1:],
                                                    cert.cocircuits))


def test_basic_linear_sequence_on_worked_example():
    c = build_complex(9, 3, EXAMPLE3_TRIPLES)
    seq = seq_masks(EXAMPLE3_SEQUENCE)
    assert check_basic_linear_sequence(c, GF2, seq)
    assert check_basic_linear_sequence(c, QQ, seq)
    # moving the last face first breaks the cocircuit property
    assert not check_basic_linear_sequence(c, GF2, [seq[-1]] + seq[:-1])
    assert not check_basic_linear_sequence(c, GF2, seq[:-1])  # wrong length


def test_cocircuit_basis_from_sequence():
    c = build_complex(9, 3, EXAMPLE3_TRIPLES)
    seq = seq_masks(EXAMPLE3_SEQUENCE)
    basis = cocircuit_space_basis_from_sequence(c, GF2, seq)
    assert len(basis) == 10
    with pytest.raises(ValueError):
        cocircuit_space_basis_from_sequence(c, GF2, list(reversed(seq)))


def chordless_cycle_oracle(edges, n):
    """True iff no induced cycle of length >= 4 exists."""
    adj = {u: set() for u in range(1, n + 1)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    for size in range(4, n + 1):
        for combo in itertools.combinations(range(1, n + 1), size):
            sub = set(combo)
            degs = [len(adj[u] & sub) for u in combo]
            if any(d != 2 for d in degs):
                continue
            # connected 2-regular induced subgraph = induced cycle
            seen = {combo[0]}
            stack = [combo[0]]
            while stack:
                u = stack.pop()
                for w in adj[u] & sub:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == size:
                return False
    return True


def test_chordality_against_cycle_oracle():
    for seed in range(60):
        inst = gen_random(6, 2, ["2/5", "1/2", "3/5"][seed % 3], 2200 + seed)
        edges = [vertices(f) for f in inst.faces]
        assert check_chordal_graph(edges, 6) == chordless_cycle_oracle(edges, 6)
    assert check_chordal_graph([], 3)
    assert check_chordal_graph([(1, 2), (2, 3)], 3)
    assert not check_chordal_graph([(1, 2), (2, 3), (3, 4), (1, 4)], 4)
    with pytest.raises(ValueError):
        check_chordal_graph([(1, 9)], 4)


def test_dense_hyperplane():
    c = build_complex(4, 2, CHORD4)
    m = SimplicialMatroid(c, QQ)
    ground = frozenset(m.ground)
    assert is_dense_hyperplane(m, ground - c.star(face(2)))
    assert is_dense_hyperplane(m, ground - c.star(face(4)))
    # a hyperplane whose complement is no simplicial star
    assert m.rank_of([face(1, 2), face(3, 4)]) == m.rank - 1
    assert not is_dense_hyperplane(m, [face(1, 2), face(3, 4)])
    assert not is_dense_hyperplane(m, ground)


def test_superdense_matches_dperfect():
    for c in small_complexes(20, 5, 2, 2500) + small_complexes(20, 6, 3, 2600, "11/20"):
        m = SimplicialMatroid(c, GF2)
        cert = check_superdense(m)
        assert (cert is not None) == (find_dperfect_sequence(c, GF2) is not None)
        if cert is not None:
            verify_superdense(m, cert)
            assert len(cert.chain) == m.rank + 1


def test_verify_superdense_rejects_corruption():
    c = build_complex(4, 2, CHORD4)
    m = SimplicialMatroid(c, GF2)
    cert = check_superdense(m)
    with pytest.raises(CertificateError):
        verify_superdense(m, SuperdenseCertificate(cert.chain[:-1], cert.witnesses[:-1]))
    with pytest.raises(CertificateError):
        verify_superdense(m, SuperdenseCertificate(cert.chain[1:] + (cert.chain[0],),
                                                   cert.witnesses))
    swapped = tuple(reversed(cert.witnesses))
    with pytest.raises(CertificateError):
        verify_superdense(m, SuperdenseCertificate(cert.chain, swapped))


def test_supersolvable_fast_path_matches_modular_oracle():
    for seed in range(40):
        inst = gen_random(5, 3, "2/5", 5000 + seed)
        if len(inst.faces) > 9:
            continue
        m = SimplicialMatroid(instance_complex(inst), GF2)
        assert check_supersolvable(m) == supersolvable_modular_chain(m)


def test_supersolvable_is_chordality_for_graphs():
    for seed in range(40):
        inst = gen_random(5, 2, "1/2", 3100 + seed)
        m = SimplicialMatroid(instance_complex(inst), GF2)
        chordal = check_chordal_graph([vertices(f) for f in inst.faces], 5)
        assert check_supersolvable(m) == chordal


def test_supersolvable_guard():
    m = SimplicialMatroid(instance_complex(gen_random(6, 2, "3/4", 11)), GF2)
    assert len(m.ground) > 10
    with pytest.raises(GuardExceeded):
        check_supersolvable(m)
    assert isinstance(check_supersolvable(m, max_ground=len(m.ground)), bool)
