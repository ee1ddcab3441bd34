import random

import pytest
from hypothesis import given, settings, strategies as st

from braidforge.presentations import sigma_alphabet
from braidforge.words import (
    Alphabet, AlphabetMismatchError, MalformedWordError, Permutation, Word, concat, conjugate,
    evaluate_perm, format_word, free_reduce, identity, inverse, parse_word, power,
)

S3 = sigma_alphabet(3)


def letters(n_gens=2, max_len=30):
    nonzero = st.integers(1, n_gens).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(nonzero, max_size=max_len)


def test_free_reduce_examples():
    assert free_reduce(S3, [1, -1]).letters == ()
    assert free_reduce(S3, [1, 2, -2, 1]).letters == (1, 1)
    assert free_reduce(S3, [-1, 1, 1]).letters == (1,)


def test_free_reduce_rejects_out_of_range():
    with pytest.raises(MalformedWordError):
        free_reduce(S3, [3])
    with pytest.raises(MalformedWordError):
        free_reduce(S3, [0])


@given(letters())
def test_free_reduce_idempotent_and_shortening(raw):
    w = free_reduce(S3, raw)
    assert free_reduce(S3, w.letters) == w
    assert len(w.letters) <= len(raw)
    assert all(a != -b for a, b in zip(w.letters, w.letters[1:]))


def test_word_ops_examples():
    s1, s2 = Word(S3, (1,)), Word(S3, (2,))
    assert inverse(concat(s1, s2)).letters == (-2, -1)
    assert power(s1, -2).letters == (-1, -1)
    assert power(s1, 0) == identity(S3)
    assert conjugate(s2, s1).letters == (1, 2, -1)


@given(letters())
def test_word_times_inverse_is_identity(raw):
    w = free_reduce(S3, raw)
    assert concat(w, inverse(w)).is_identity()
    assert (w * ~w).is_identity()


def test_alphabet_mismatch():
    other = Alphabet(("x", "y"))
    with pytest.raises(AlphabetMismatchError):
        concat(Word(S3, (1,)), Word(other, (1,)))


def test_parse_and_format_round_trip():
    w = parse_word(S3, "s1 s2^2 s1^-1")
    assert w.letters == (1, 2, 2, -1)
    assert format_word(w) == "s1 s2^2 s1^-1"
    assert parse_word(S3, "1").is_identity()
    with pytest.raises(MalformedWordError):
        parse_word(S3, "s9")
    with pytest.raises(MalformedWordError):
        parse_word(S3, "s1^^2")


def _standard_images(n):
    return {i: Permutation.transposition(n, i, i + 1) for i in range(1, n)}


def test_evaluate_perm_examples():
    images = _standard_images(3)
    assert str(evaluate_perm(Word(S3, (1,)), images)) == "(1 2)"
    for n in range(2, 8):
        delta = Word(sigma_alphabet(n), tuple(range(1, n)))
        assert evaluate_perm(delta, _standard_images(n)) == Permutation.from_cycles(n, [range(1, n + 1)])


def test_evaluate_perm_missing_image():
    with pytest.raises(KeyError):
        evaluate_perm(Word(S3, (2,)), {1: Permutation.identity(3)})


def test_evaluate_perm_homomorphism_random_pairs():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(2, 6)
        alphabet = sigma_alphabet(n)
        images = _standard_images(n)
        u, v = (free_reduce(alphabet, [rng.choice((1, -1)) * rng.randint(1, n - 1)
                                       for _ in range(rng.randint(0, 50))]) for _ in range(2))
        pu, pv = evaluate_perm(u, images), evaluate_perm(v, images)
        assert evaluate_perm(concat(u, v), images) == pu @ pv
        assert evaluate_perm(inverse(u), images) == pu.inverse()
    assert evaluate_perm(identity(S3), _standard_images(3)).is_identity()


@settings(max_examples=50)
@given(st.permutations(range(1, 7)), st.permutations(range(1, 7)))
def test_permutation_group_laws(a, b):
    p, q = Permutation(tuple(a)), Permutation(tuple(b))
    assert (p @ q).inverse() == q.inverse() @ p.inverse()
    assert (p @ p.inverse()).is_identity()
    assert Permutation.from_cycles(6, p.cycles()) == p
