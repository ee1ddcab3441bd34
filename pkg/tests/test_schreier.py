import pytest

from braidforge.abelian import AbelianInvariants, abelian_invariants
from braidforge.cosets import enumerate_cosets, group_order, permutation_representation
from braidforge.presentations import (
    artin, central_quotient, named_word, projective_plane, pure_generators, sphere,
    standard_perm_images,
)
from braidforge.schreier import schreier_transversal, subgroup_presentation
from braidforge.words import Word, evaluate_perm, format_word


def pure_rs(p):
    t = enumerate_cosets(p, pure_generators(p.family, p.n))
    return t, subgroup_presentation(p, t)


def test_transversal_examples():
    one = enumerate_cosets(sphere(3), [named_word("sphere", "alpha0", 3), named_word("sphere", "alpha1", 3)])
    assert [format_word(w) for w in schreier_transversal(one).words] == ["1"]
    two = enumerate_cosets(sphere(2), pure_generators("sphere", 2))
    assert [format_word(w) for w in schreier_transversal(two).words] == ["1", "s1"]


def test_transversal_realizes_symmetric_group():
    p = artin(3)
    t = enumerate_cosets(p, pure_generators("artin", 3))
    tr = schreier_transversal(t)
    assert len(tr) == 6
    images = standard_perm_images(p)
    assert len({evaluate_perm(w, images) for w in tr.words}) == 6
    for c, w in enumerate(tr.words):
        assert t.trace(0, w) == c
        if w.letters:
            prefix = w.letters[:-1]
            assert any(v.letters == prefix for v in tr.words)


@pytest.mark.parametrize("n", [3, 4])
def test_pure_braid_abelianization(n):
    _, rs = pure_rs(artin(n))
    assert abelian_invariants(rs.presentation) == AbelianInvariants((), n * (n - 1) // 2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_pure_sphere_abelianization(n):
    _, rs = pure_rs(sphere(n))
    assert abelian_invariants(rs.presentation) == AbelianInvariants((2,), n * (n - 3) // 2)


@pytest.mark.parametrize("n", [2, 3])
def test_pure_projective_abelianization(n):
    _, rs = pure_rs(projective_plane(n))
    assert abelian_invariants(rs.presentation) == AbelianInvariants((2,) * n, 0)


@pytest.mark.parametrize("n", [3, 4])
def test_pure_disc_mapping_class_abelianization(n):
    _, rs = pure_rs(central_quotient(artin(n), n))
    assert abelian_invariants(rs.presentation) == AbelianInvariants((), n * (n - 1) // 2 - 1)


@pytest.mark.parametrize("n", [4, 5])
def test_pure_sphere_mapping_class_abelianization(n):
    _, rs = pure_rs(central_quotient(sphere(n), n))
    assert abelian_invariants(rs.presentation) == AbelianInvariants((), n * (n - 3) // 2)


def test_p3_sphere_has_order_two():
    _, rs = pure_rs(sphere(3))
    assert group_order(rs.presentation) == 2


@pytest.mark.parametrize("p", [sphere(3), projective_plane(2), artin(3), sphere(4)], ids=lambda p: p.label)
def test_schreier_generator_count_and_relator_trace(p):
    t, rs = pure_rs(p)
    assert rs.unsimplified_generator_count == t.n_cosets * p.n_gens - (t.n_cosets - 1)
    unsimplified = subgroup_presentation(p, t, simplify=False)
    assert unsimplified.presentation.n_gens == rs.unsimplified_generator_count
    reps = permutation_representation(t)
    for i in range(1, rs.presentation.n_gens + 1):
        parent = rs.parent_word(i)
        assert t.trace(0, parent) == 0
        assert evaluate_perm(parent, standard_perm_images(p)).is_identity()
    for r in rs.presentation.relators:
        assert evaluate_perm(rs.lift(r), reps).is_identity()


@pytest.mark.parametrize("p", [sphere(4), projective_plane(3), artin(4)], ids=lambda p: p.label)
def test_index_one_subgroup_keeps_abelianization(p):
    family = p.family
    gens = ([named_word(family, "a", p.n), named_word(family, "b", p.n)] if family == "projective_plane"
            else [named_word(family, "alpha0", p.n), named_word(family, "alpha1", p.n)])
    if family == "artin":
        gens = [named_word(family, "alpha0", p.n), Word(p.alphabet, (1,))]
    t = enumerate_cosets(p, gens)
    assert t.n_cosets == 1
    rs = subgroup_presentation(p, t)
    assert abelian_invariants(rs.presentation) == abelian_invariants(p)
