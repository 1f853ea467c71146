import random

import pytest

from cuspidal.braids import (
    ArcSpec, BraidWord, artin_action, braid_equal, free_reduce,
    halftwist_around_arc, permutation_image, transposition,
)
from cuspidal.groups import (
    OVERFLOW, Presentation, abelianization, add_projective_relation,
    coset_action, count_homs, enumerate_homs_to_sym, fingerprint, perm_word,
    same_relator, tietze_simplify, todd_coxeter, van_kampen,
)

GEN_NAMES = ("a1", "a2", "b2", "b1")


def affine_presentation():
    """<a1,a2,b2,b1 | a1a2a1=a2a1a2, b1b2b1=b2b1b2, a2b2a2=b2a2b2, b2b1=a1b2>."""
    return Presentation(GEN_NAMES, (
        (1, 2, 1, -2, -1, -2),
        (4, 3, 4, -3, -4, -3),
        (2, 3, 2, -3, -2, -3),
        (3, 4, -3, -1),
    ))


def fixture_factors():
    """Monodromy fixture: cubes around (1,2), (3,4), (2,3) and the (1,4) twist."""
    tangency = halftwist_around_arc(ArcSpec((1, 4), (1, -1)), 4)
    return [
        halftwist_around_arc(ArcSpec((1, 2)), 4) ** 3,
        halftwist_around_arc(ArcSpec((3, 4)), 4) ** 3,
        tangency,
        halftwist_around_arc(ArcSpec((2, 3)), 4) ** 3,
    ]


def mu_images():
    return (transposition(4, 1, 2), transposition(4, 2, 3),
            transposition(4, 2, 4), transposition(4, 1, 4))


def test_van_kampen_empty_factors_is_free():
    p = van_kampen([], 4)
    assert p.relators == ()
    assert abelianization(p) == [0, 0, 0, 0]


def test_van_kampen_single_cube_gives_braid_relation():
    p = van_kampen([BraidWord(2, (1, 1, 1))], 2)
    braid_rel = (1, 2, 1, -2, -1, -2)
    assert all(same_relator(r, braid_rel) for r in p.relators)
    assert len(p.relators) >= 1


def test_van_kampen_fixture_contains_paper_relations():
    p = van_kampen(fixture_factors(), 4, GEN_NAMES)
    for target in affine_presentation().relators:
        assert any(same_relator(r, target) for r in p.relators), target


def test_fixture_presentation_fingerprint_matches_paper():
    p = van_kampen(fixture_factors(), 4, GEN_NAMES)
    assert fingerprint(p) == fingerprint(affine_presentation())


def test_abelianizations():
    aff = affine_presentation()
    assert abelianization(aff) == [0]
    proj = add_projective_relation(aff)
    assert abelianization(proj) == [4]
    assert abelianization(Presentation(("x",), ((1, 1),))) == [2]
    free_with_product = Presentation(GEN_NAMES, ((1, 2, 3, 4),))
    assert abelianization(free_with_product) == [0, 0, 0]


def test_todd_coxeter_cyclic5():
    assert todd_coxeter(Presentation(("x",), ((1, 1, 1, 1, 1),))) == 5


def test_todd_coxeter_symmetric3():
    # <s, t | s^2, t^2, (st)^3> = S3
    p = Presentation(("s", "t"), ((1, 1), (2, 2), (1, 2, 1, 2, 1, 2)))
    assert todd_coxeter(p) == 6


def test_todd_coxeter_projective_order_12():
    proj = add_projective_relation(affine_presentation())
    assert todd_coxeter(proj, max_cosets=10000) == 12


def test_todd_coxeter_affine_overflows():
    assert todd_coxeter(affine_presentation(), max_cosets=2000) == OVERFLOW


def test_coset_action_is_closed():
    proj = add_projective_relation(affine_presentation())
    order, perms = coset_action(proj)
    assert order == 12
    for r in proj.relators:
        for pt in range(order):
            assert perm_word(r, perms, pt) == pt


def test_tangency_relators_die_in_the_two_quotients():
    tangency = fixture_factors()[2]
    relators = [free_reduce((-i,) + artin_action(tangency, (i,))) for i in range(1, 5)]
    relators = [r for r in relators if r]
    assert relators  # the tangency factor is not trivial
    proj = add_projective_relation(affine_presentation())
    order, perms = coset_action(proj)
    mu = mu_images()
    for r in relators:
        for pt in range(order):
            assert perm_word(r, perms, pt) == pt
        for pt in range(4):
            assert perm_word(r, mu, pt) == pt


def test_mu_satisfies_the_paper_presentation():
    mu = mu_images()
    for r in affine_presentation().relators:
        for pt in range(4):
            assert perm_word(r, mu, pt) == pt


def test_s4_uniqueness():
    classes, tuple_count = enumerate_homs_to_sym(affine_presentation(), 4)
    assert len(classes) == 1
    # the orbit of the single class is free: the image generates S4, whose
    # centralizer in S4 is trivial, so all 24 conjugates are distinct tuples
    assert tuple_count == 24
    rep = next(iter(classes.values()))
    from cuspidal.groups import _perm_inv, _perm_mul
    import itertools
    mu = mu_images()
    assert any(
        tuple(_perm_mul(_perm_mul(_perm_inv(s), g), s) for g in rep) == mu
        for s in itertools.permutations(range(4)))


def test_free_two_generators_onto_s2():
    p = Presentation(("x1", "x2"), ())
    classes, count = enumerate_homs_to_sym(p, 2)
    assert len(classes) == 1
    assert count == 1  # both generators must hit the unique transposition


def test_tietze_projective_two_generator_form():
    proj = add_projective_relation(affine_presentation())
    simplified, exhausted = tietze_simplify(proj)
    assert not exhausted
    assert simplified.n_generators == 2
    braid_rel = (1, 2, 1, -2, -1, -2)
    product_rel = (2, 1, 1, 2)
    assert len(simplified.relators) == 2
    assert any(same_relator(r, braid_rel) for r in simplified.relators)
    assert any(same_relator(r, product_rel) for r in simplified.relators)


def test_tietze_eliminates_defined_generator():
    p = Presentation(("g1", "g2", "g3"), ((3, -1, -2), (1, 1, 1)))
    simplified, _ = tietze_simplify(p)
    assert simplified.n_generators == 2
    assert any(same_relator(r, (1, 1, 1)) for r in simplified.relators)


def test_tietze_preserves_fingerprint():
    proj = add_projective_relation(affine_presentation())
    simplified, _ = tietze_simplify(proj)
    assert fingerprint(simplified) == fingerprint(proj)
    assert todd_coxeter(simplified) == 12


def test_van_kampen_invariant_under_braid_equal_replacement():
    factors = fixture_factors()
    replaced = list(factors)
    # replace the first cube by an equal braid word written differently
    w = BraidWord(4, (2, -2, 1, 1, 1))
    assert braid_equal(w, factors[0])
    replaced[0] = w
    p1 = van_kampen(factors, 4)
    p2 = van_kampen(replaced, 4)
    set1 = list(p1.relators)
    assert len(set1) == len(p2.relators)
    for r in p2.relators:
        assert any(same_relator(r, s) for s in set1)


def test_hurwitz_move_preserves_fingerprint():
    factors = fixture_factors()
    moved = list(factors)
    moved[1] = factors[1] * factors[2] * factors[1].inverse()
    moved[2] = factors[1]
    p1 = van_kampen(factors, 4)
    p2 = van_kampen(moved, 4)
    assert fingerprint(p1) == fingerprint(p2)
    assert fingerprint(add_projective_relation(p1)) == fingerprint(add_projective_relation(p2))


def test_projective_relation_requires_four_generators():
    with pytest.raises(ValueError):
        add_projective_relation(Presentation(("x",), ()))
