from math import factorial, gcd

import pytest

from braidforge.cosets import (
    CosetTable, EnumLimits, ResourceExceeded, enumerate_cosets, group_order, index,
    permutation_representation, validate_table,
)
from braidforge.presentations import (
    add_relators, artin, named_word, projective_plane, pure_generators, sphere,
    standard_perm_images, y_set,
)
from braidforge.words import Permutation, Word, evaluate_perm

FELSCH = EnumLimits(strategy="felsch")


def both(p, gens=()):
    a = enumerate_cosets(p, gens)
    b = enumerate_cosets(p, gens, FELSCH)
    assert isinstance(a, CosetTable) and isinstance(b, CosetTable)
    assert a.n_cosets == b.n_cosets
    return a.n_cosets


def test_orders():
    assert group_order(sphere(2)) == 2
    assert both(sphere(3)) == 12
    assert both(projective_plane(2)) == 16
    assert group_order(projective_plane(1)) == 2


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_a_b_generate(n):
    p = projective_plane(n)
    ab = [named_word("projective_plane", "a", n), named_word("projective_plane", "b", n)]
    assert both(p, ab) == 1


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_alpha0_alpha1_generate(n):
    gens = [named_word("sphere", "alpha0", n), named_word("sphere", "alpha1", n)]
    assert index(sphere(n), gens) == 1


@pytest.mark.parametrize("n", [3, 4])
def test_pure_braid_index(n):
    assert both(artin(n), pure_generators("artin", n)) == factorial(n)


@pytest.mark.parametrize("n", [2, 3])
def test_pure_projective_index(n):
    assert index(projective_plane(n), pure_generators("projective_plane", n)) == factorial(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_y_set_index(n):
    p = projective_plane(n)
    assert index(p, y_set(n)) == factorial(n)


@pytest.mark.parametrize("n", range(3, 9))
def test_sphere_quotients(n):
    def quotient(name):
        return group_order(add_relators(sphere(n), [named_word("sphere", name, n)]))
    assert quotient("alpha1") == gcd(n, 2)
    assert quotient("alpha0") == n - 1
    assert quotient("alpha2") == (6 if n == 3 else n - 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_projective_quotients(n):
    p = projective_plane(n)
    for name in ("a", "b"):
        assert group_order(add_relators(p, [named_word("projective_plane", name, n)])) == 2


@pytest.mark.parametrize("n", range(2, 7))
def test_normal_closure_of_s1(n):
    p = artin(n)
    assert group_order(add_relators(p, [Word(p.alphabet, (1,))])) == 1


def test_resource_exceeded_is_not_an_answer():
    out = enumerate_cosets(projective_plane(2), (), EnumLimits(max_cosets=5))
    assert isinstance(out, ResourceExceeded)
    assert group_order(projective_plane(2), EnumLimits(max_cosets=5)) is None
    with pytest.raises(ValueError):
        EnumLimits(max_cosets=0)
    with pytest.raises(ValueError):
        EnumLimits(strategy="random")


def test_infinite_group_is_inconclusive():
    out = enumerate_cosets(artin(3), (), EnumLimits(max_cosets=2000))
    assert isinstance(out, ResourceExceeded)


def test_determinism_and_serialization():
    for strategy in ("hlt", "felsch"):
        limits = EnumLimits(strategy=strategy)
        a = enumerate_cosets(sphere(3), (), limits).serialize()
        b = enumerate_cosets(sphere(3), (), limits).serialize()
        assert a == b
    text = enumerate_cosets(sphere(3)).serialize()
    lines = text.splitlines()
    assert lines[0] == "# cosets=12 columns: s1 s1^-1 s2 s2^-1"
    assert len(lines) == 13
    assert all(1 <= int(v) <= 12 for line in lines[1:] for v in line.split())


def test_hlt_and_felsch_give_identical_standardized_tables():
    for p in (sphere(3), projective_plane(2), add_relators(sphere(5), [named_word("sphere", "alpha0", 5)])):
        assert (enumerate_cosets(p).action == enumerate_cosets(p, (), FELSCH).action)


def test_lagrange():
    for p in (sphere(3), projective_plane(2)):
        order = group_order(p)
        for name in ("alpha0", "alpha1", "full_twist", "garside"):
            assert order % index(p, [named_word(p.family, name, p.n)]) == 0


def test_validate_table_catches_tampering():
    t = enumerate_cosets(sphere(3))
    rows = [list(r) for r in t.action]
    rows[0][0], rows[1][0] = rows[1][0], rows[0][0]
    bad = CosetTable(t.presentation, t.subgroup_gens, t.n_cosets, tuple(tuple(r) for r in rows))
    with pytest.raises(RuntimeError):
        validate_table(bad)


def test_permutation_representation():
    t = enumerate_cosets(sphere(3))
    reps = permutation_representation(t)
    for r in t.presentation.relators:
        assert evaluate_perm(r, reps).is_identity()
    # regular: the image group has order 12
    seen = {Permutation.identity(12)}
    frontier = list(seen)
    while frontier:
        g = frontier.pop()
        for h in reps.values():
            k = g @ h
            if k not in seen:
                seen.add(k)
                frontier.append(k)
    assert len(seen) == 12

    one = enumerate_cosets(sphere(4), [named_word("sphere", "alpha0", 4), named_word("sphere", "alpha1", 4)])
    assert all(p == Permutation.identity(1) for p in permutation_representation(one).values())


@pytest.mark.parametrize("n", [3, 4])
def test_pure_subgroup_action_is_the_symmetric_group(n):
    p = artin(n)
    t = enumerate_cosets(p, pure_generators("artin", n))
    reps = permutation_representation(t)
    std = standard_perm_images(p)
    for w in pure_generators("artin", n):
        assert evaluate_perm(w, reps).is_identity()
    # cosets of P_n are S_n acting on itself: each word acts regularly, with
    # every cycle as long as the order of its permutation
    for w in [named_word("artin", "alpha0", n), named_word("artin", "garside", n),
              Word(p.alphabet, (1,))]:
        on_cosets, on_points = evaluate_perm(w, reps), evaluate_perm(w, std)
        g, k = on_points, 1
        while not g.is_identity():
            g, k = g @ on_points, k + 1
        cycles = on_cosets.cycles()
        if k == 1:
            assert cycles == []
        else:
            assert {len(c) for c in cycles} == {k}
            assert sum(map(len, cycles)) == factorial(n)
