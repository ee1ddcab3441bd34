import random

import pytest
from hypothesis import given, settings, strategies as st

from braidforge.garside import (
    WrongFamilyError, artin_action, equal_by_action, equal_in_braid_group, is_left_weighted,
    normal_form,
)
from braidforge.presentations import named_word, sigma_alphabet
from braidforge.words import Word, concat, conjugate, format_word, inverse, power


def braid_words(n, max_len=25):
    letter = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letter, max_size=max_len).map(lambda xs: Word(sigma_alphabet(n), tuple(xs)))


def test_normal_form_examples():
    assert normal_form([1, -1], 3).is_identity()
    for n in range(2, 7):
        nf = normal_form(named_word("artin", "full_twist", n), n)
        assert (nf.inf, nf.factors) == (2, ())
    nf = normal_form(named_word("artin", "garside", 3), 3)
    assert (nf.inf, nf.factors) == (1, ())


def test_normal_form_rejects_rho_letters():
    with pytest.raises(WrongFamilyError):
        normal_form(named_word("projective_plane", "b", 3), 3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_roots_of_full_twist(n):
    twist = named_word("artin", "full_twist", n)
    assert equal_in_braid_group(power(named_word("artin", "alpha0", n), n), twist, n)
    assert equal_in_braid_group(power(named_word("artin", "alpha1", n), n - 1), twist, n)
    assert equal_by_action(power(named_word("artin", "alpha1", n), n - 1), twist, n)


@pytest.mark.parametrize("n", [4, 5])
def test_alpha0_conjugates_generators(n):
    alpha0 = named_word("artin", "alpha0", n)
    a = sigma_alphabet(n)
    for i in range(1, n - 1):
        lhs = conjugate(Word(a, (1,)), power(alpha0, i))
        assert equal_in_braid_group(lhs, Word(a, (i + 1,)), n)


@pytest.mark.parametrize("n", [3, 4])
def test_full_twist_as_product_of_pure_generators(n):
    product = Word(sigma_alphabet(n), ())
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            product = concat(product, named_word("artin", "a_ij", n, i, j))
    assert equal_in_braid_group(named_word("artin", "full_twist", n), product, n)


def test_artin_action_examples():
    for n in range(2, 5):
        for k in range(1, n + 1):
            assert artin_action((), n, k).letters == (k,)
    assert format_word(artin_action([1], 2, 1)) == "x1 x2 x1^-1"
    assert format_word(artin_action([1], 2, 2)) == "x1"
    with pytest.raises(ValueError):
        artin_action([1], 2, 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n), braid_words(n))))
def test_normal_form_properties(case):
    n, w = case
    nf = normal_form(w, n)
    assert is_left_weighted(nf)
    assert all(f != tuple(range(n)) for f in nf.factors)
    assert normal_form(nf.to_word(w.alphabet), n) == nf
    assert equal_by_action(nf.to_word(w.alphabet), w, n)
    assert normal_form(concat(w, inverse(w)), n).is_identity()


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n), braid_words(n))))
def test_full_twist_is_central(case):
    n, w = case
    twist = named_word("artin", "full_twist", n)
    assert equal_in_braid_group(concat(twist, w), concat(w, twist), n)


def test_oracles_agree_on_random_pairs():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 5)
        u, v = ([rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 12))]
                for _ in range(2))
        assert equal_in_braid_group(u, v, n) == equal_by_action(u, v, n)

