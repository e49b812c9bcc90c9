import random
from fractions import Fraction

import pytest
from conftest import (
    all_subgroups_brute,
    conjugate,
    random_even_gram,
    random_symmetric_gram,
    random_unimodular,
)

from cubiclat.discform import (
    GroupOrderBoundError,
    OddLatticeError,
    discriminant_group,
    discriminant_quadratic_form,
    easy_test,
    even_overlattices,
    gauss_milgram_signature,
    isotropic_subgroups,
)
from cubiclat.lattice import determinant, lattice, signature


def test_group_order_equals_det():
    rng = random.Random(21)
    done = 0
    while done < 40:
        g = random_symmetric_gram(rng, rng.randint(1, 3), 6)
        l = lattice(g)
        d = determinant(l)
        if d == 0:
            continue
        assert discriminant_group(l).order == abs(d)
        done += 1


def test_group_structure_examples():
    assert discriminant_group(lattice(((14, 2), (2, 0)))).invariants == (2, 2)
    assert discriminant_group(lattice(((14, 7), (7, 2)))).invariants == (21,)
    assert discriminant_group(lattice(((1,),))).invariants == ()


def test_quadratic_form_values():
    q = discriminant_quadratic_form(lattice(((2,),)))
    assert q.q((1,)) == Fraction(1, 2)
    assert q.b((1,), (1,)) == Fraction(1, 2)
    with pytest.raises(OddLatticeError):
        discriminant_quadratic_form(lattice(((3,),)))


def test_milgram_small_cases():
    for gram, sig in ((((2,),), 1), (((-2,),), -1),
                      (((2, 0), (0, 2)), 2), (((14, 7), (7, 2)), 0)):
        q = discriminant_quadratic_form(lattice(gram))
        p, n, _ = signature(lattice(gram))
        assert sig % 8 == (p - n) % 8
        assert gauss_milgram_signature(q) == (p - n) % 8


def test_milgram_random_even_lattices():
    rng = random.Random(23)
    for _ in range(60):
        g = random_even_gram(rng, rng.randint(1, 4))
        l = lattice(g)
        q = discriminant_quadratic_form(l)
        p, n, _ = signature(l)
        assert gauss_milgram_signature(q) == (p - n) % 8


def test_isotropic_subgroups_match_brute_force():
    for gram in (((14, 2), (2, 0)), ((14, 3), (3, 0)),
                 ((14, 6), (6, 2)), ((14, 7), (7, 2)),
                 ((2, 0), (0, -2)), ((4, 0), (0, -4))):
        l = lattice(gram)
        q = discriminant_quadratic_form(l)
        got = {frozenset(s.elements) for s in isotropic_subgroups(q)}
        brute = {h for h in all_subgroups_brute(q.group.invariants)
                 if all(q.q(x) == 0 for x in h)}
        assert got == brute


def test_isotropic_bound():
    q = discriminant_quadratic_form(lattice(((14, 2), (2, 0))))
    with pytest.raises(GroupOrderBoundError):
        isotropic_subgroups(q, bound=2)


def test_even_overlattices_table1():
    counts = {}
    for gram in (((14, 2), (2, 0)), ((14, 3), (3, 0)),
                 ((14, 6), (6, 2)), ((14, 7), (7, 2))):
        overs = even_overlattices(lattice(gram))
        counts[gram] = sorted(o.index for o in overs)
    assert counts[((14, 2), (2, 0))] == [1, 2]
    assert counts[((14, 3), (3, 0))] == [1, 3]
    assert counts[((14, 6), (6, 2))] == [1]
    assert counts[((14, 7), (7, 2))] == [1]


def test_overlattice_determinant_relation():
    rng = random.Random(29)
    for _ in range(20):
        l = lattice(random_even_gram(rng, rng.randint(1, 3)))
        for o in even_overlattices(l):
            assert determinant(o.lattice) * o.index ** 2 == determinant(l)


def test_easy_test_examples():
    assert str(easy_test(lattice(((1, 0), (0, 1))))) == "Reject(1): unimodular lattice"
    v = easy_test(lattice(((1, 0, 0), (0, 1, 0), (0, 0, 7))))
    assert (v.passed, v.criterion) == (False, 2)
    v = easy_test(lattice(((3, 0, 0), (0, 2, 0), (0, 0, 1))))
    assert (v.passed, v.criterion) == (False, 3)
    assert easy_test(lattice(((3, 4), (4, 10)))).passed


def test_easy_test_base_change_invariant():
    rng = random.Random(31)
    for gram in (((1, 0), (0, 1)),
                 ((1, 0, 0), (0, 1, 0), (0, 0, 7)),
                 ((3, 0, 0), (0, 2, 0), (0, 0, 1))):
        base = easy_test(lattice(gram))
        for _ in range(10):
            u = random_unimodular(rng, len(gram))
            v = easy_test(lattice(conjugate(gram, u)))
            assert (v.passed, v.criterion) == (base.passed, base.criterion)
