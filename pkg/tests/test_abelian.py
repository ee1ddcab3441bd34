import random
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from braidforge.abelian import (
    Abelianization, AbelianInvariants, IntMatrix, abelian_invariants, abelianized_image,
    determinant, min_gens_lower_bound, relation_matrix, smith_normal_form,
)
from braidforge.presentations import (
    Presentation, artin, central_quotient, named_word, projective_plane, sphere,
)
from braidforge.words import AlphabetMismatchError, Word, concat, conjugate, identity, inverse, power


def test_relation_matrix_examples():
    assert relation_matrix(artin(3)).tolist() == [[1, -1]]
    assert relation_matrix(sphere(2)).tolist() == [[2]]


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == (1, 6)
    assert smith_normal_form([[0]]).diagonal == (0,)
    assert smith_normal_form([[1, 0], [0, 0]]).diagonal == (1, 0)


def test_snf_big_integers():
    big = 10 ** 40
    snf = smith_normal_form([[big, 0], [0, big + 1]])
    assert snf.diagonal == (1, big * (big + 1))
    assert (snf.U @ IntMatrix.from_rows([[big, 0], [0, big + 1]]) @ snf.V) == snf.D


def _determinantal_divisors(rows):
    m, n = len(rows), len(rows[0]) if rows else 0
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for r in combinations(range(m), k):
            for c in combinations(range(n), k):
                g = gcd(g, determinant(IntMatrix.from_rows([[rows[i][j] for j in c] for i in r])))
        out.append(g)
    return out


def check_snf(rows):
    M = IntMatrix.from_rows(rows)
    snf = smith_normal_form(M)
    assert snf.U @ M @ snf.V == snf.D
    assert abs(determinant(snf.U)) == 1 and abs(determinant(snf.V)) == 1
    d = snf.diagonal
    assert all(x >= 0 for x in d)
    for a, b in zip(d, d[1:]):
        assert (b % a == 0) if a else b == 0
    for i in range(snf.D.rows):
        for j in range(snf.D.cols):
            if i != j:
                assert snf.D[i, j] == 0
    return snf


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-20, 20), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=120, deadline=None)
@given(matrices)
def test_snf_matches_determinantal_divisors(rows):
    snf = check_snf(rows)
    divisors = _determinantal_divisors(rows)
    prod = 1
    for k, dk in enumerate(divisors):
        prod *= snf.diagonal[k]
        assert prod == dk


def test_snf_agrees_with_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf
    rng = random.Random(3)
    for _ in range(60):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-20, 20) for _ in range(c)] for _ in range(r)]
        ours = [abs(x) for x in check_snf(rows).diagonal]
        theirs = sympy_snf(sympy.Matrix(rows), domain=sympy.ZZ)
        expected = sorted((abs(int(theirs[i, i])) for i in range(min(r, c))),
                          key=lambda x: (x == 0, x))
        assert ours == expected


def test_abelian_invariants_examples():
    for n in range(2, 7):
        assert abelian_invariants(artin(n)) == AbelianInvariants((), 1)
    for n in range(3, 8):
        assert abelian_invariants(sphere(n)) == AbelianInvariants((2 * (n - 1),), 0)
    for n in range(2, 7):
        assert abelian_invariants(projective_plane(n)) == AbelianInvariants((2, 2), 0)
    for n in range(3, 7):
        assert abelian_invariants(central_quotient(artin(n), n)) == AbelianInvariants((n * (n - 1),), 0)
    assert str(abelian_invariants(sphere(5))) == "Z8"
    assert abelian_invariants(sphere(5)).to_dict() == {"free_rank": 0, "torsion": [8]}


def test_min_gens_lower_bound():
    assert min_gens_lower_bound(projective_plane(3)) == 2
    assert min_gens_lower_bound(artin(5)) == 1


def test_invariants_validation():
    with pytest.raises(ValueError):
        AbelianInvariants((1,), 0)
    with pytest.raises(ValueError):
        AbelianInvariants((2, 3), 0)


def _relative(ab, w, s1):
    """k with image(w) = k·image(s1) in a cyclic group generated by s1."""
    m = ab.invariants.torsion[0]
    target, base = ab.image(w).torsion[0], ab.image(s1).torsion[0]
    return next(k for k in range(m) if (k * base - target) % m == 0)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_sphere_alpha_images(n):
    p = sphere(n)
    ab = Abelianization(p)
    s1 = Word(p.alphabet, (1,))
    assert ab.image(s1).moduli == (2 * (n - 1),)
    assert [_relative(ab, named_word("sphere", f"alpha{i}", n), s1) for i in range(3)] == [n - 1, n, n - 1]
    assert ab.image(identity(p.alphabet)).torsion == (0,)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_projective_plane_a_image(n):
    p = projective_plane(n)
    ab = Abelianization(p)
    sigma = ab.image(Word(p.alphabet, (1,)))
    rho = ab.image(Word(p.alphabet, (n,)))
    a = ab.image(named_word("projective_plane", "a", n))
    expected = tuple(((n - 1) * s + r) % m for s, r, m in zip(sigma.torsion, rho.torsion, a.moduli))
    assert a.torsion == expected


def test_abelianized_image_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchError):
        abelianized_image(sphere(3), Word(sphere(4).alphabet, (1,)))


def test_abelianization_is_homomorphism():
    rng = random.Random(5)
    p = projective_plane(3)
    ab = Abelianization(p)
    for _ in range(200):
        u, v = (Word(p.alphabet, tuple(rng.choice((1, -1)) * rng.randint(1, p.n_gens)
                                       for _ in range(rng.randint(0, 15)))) for _ in range(2))
        iu, iv, iuv = ab.image(u), ab.image(v), ab.image(concat(u, v))
        assert iuv.torsion == tuple((a + b) % m for a, b, m in zip(iu.torsion, iv.torsion, iuv.moduli))


@pytest.mark.parametrize("p", [sphere(4), projective_plane(3), central_quotient(artin(4), 4)],
                         ids=lambda p: p.label)
def test_invariants_stable_under_tietze_moves(p):
    rng = random.Random(17)
    base = abelian_invariants(p)
    for _ in range(10):
        rels = list(p.relators)
        rng.shuffle(rels)
        for i in range(len(rels)):
            if rng.random() < 0.5:
                rels[i] = inverse(rels[i])
            if rng.random() < 0.5:
                g = Word(p.alphabet, (rng.choice((1, -1)) * rng.randint(1, p.n_gens),))
                rels[i] = conjugate(rels[i], power(g, rng.randint(1, 3)))
        q = Presentation(p.alphabet, tuple(rels), p.label, p.family, p.n, p.mapping_class)
        assert abelian_invariants(q) == base
