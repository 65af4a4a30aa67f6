import random

import pytest

from catfrob.categories import (FINSET, FINVECT, GRVECT, ContractViolation, FnMor, GradedSpace, LinMor,
                                probe_morphisms, probe_objects)
from catfrob.exact import RationalMatrix

M = RationalMatrix.from_rows


def test_probe_objects_enumeration():
    assert probe_objects(FINVECT, 7, 4) == [1, 0, 2, 3]
    assert probe_objects(FINSET, 42, 3) == [1, 0, 2]
    assert probe_objects(GRVECT, 0, 4) == [GradedSpace.of(1, 0), GradedSpace.of(0, 0), GradedSpace.of(0, 1),
                                          GradedSpace.of(1, 1)]


def test_finvect_equalizer():
    f = LinMor(2, 1, M([[1, 0]]))
    g = LinMor(2, 1, M([[0, 1]]))
    e_obj, e = FINVECT.equalizer(f, g)
    assert e_obj == 1
    assert e.mat == M([[1], [1]])
    assert FINVECT.equal(FINVECT.compose(f, e), FINVECT.compose(g, e))


def test_equalizer_of_equal_maps_is_identity():
    f = LinMor(2, 1, M([[1, 3]]))
    e_obj, e = FINVECT.equalizer(f, f)
    assert e_obj == 2 and e.mat == RationalMatrix.identity(2)


def test_finset_equalizer():
    f, g = FINSET.mor(3, 2, [0, 0, 1]), FINSET.mor(3, 2, [0, 1, 1])
    e_obj, e = FINSET.equalizer(f, g)
    assert e_obj == 2 and e.table == (0, 2)


def test_equalizer_universal_property():
    f = LinMor(3, 2, M([[1, 0, 1], [0, 1, 0]]))
    g = LinMor(3, 2, M([[0, 0, 1], [0, 1, 0]]))
    _, e = FINVECT.equalizer(f, g)
    h = LinMor(2, 3, M([[0, 0], [1, 0], [0, 5]]))
    k = FINVECT.factor(e, h)
    assert k is not None and FINVECT.equal(FINVECT.compose(e, k), h)
    assert FINVECT.factor(e, LinMor(1, 3, M([[1], [0], [0]]))) is None


def test_non_parallel_equalizer_is_rejected():
    with pytest.raises(ContractViolation):
        FINVECT.equalizer(FINVECT.id(2), FINVECT.id(3))


def test_symmetry_examples():
    assert FINVECT.symmetry(1, 3).mat == RationalMatrix.identity(3)
    swap = FINVECT.symmetry(2, 2).mat
    assert swap == M([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    odd = GradedSpace.of(0, 1)
    assert GRVECT.symmetry(odd, odd).mat == M([[-1]])


@pytest.mark.parametrize("cat", [FINVECT, GRVECT, FINSET], ids=lambda c: c.name)
def test_symmetry_is_an_involution(cat):
    objs = probe_objects(cat, 0, 4)
    for x in objs:
        for y in objs:
            s = cat.compose(cat.symmetry(y, x), cat.symmetry(x, y))
            assert cat.equal(s, cat.id(cat.tensor_obj(x, y)))


@pytest.mark.parametrize("cat", [FINVECT, GRVECT, FINSET], ids=lambda c: c.name)
def test_symmetry_is_natural(cat):
    objs = [o for o in probe_objects(cat, 0, 4) if cat.size(o) > 0]
    for x in objs:
        for y in objs:
            for f in probe_morphisms(cat, x, y, seed=1, count=2):
                for g in probe_morphisms(cat, y, x, seed=2, count=2):
                    lhs = cat.compose(cat.symmetry(y, x), cat.tensor(f, g))
                    rhs = cat.compose(cat.tensor(g, f), cat.symmetry(x, y))
                    assert cat.equal(lhs, rhs)


@pytest.mark.parametrize("cat", [FINVECT, GRVECT, FINSET], ids=lambda c: c.name)
def test_composition_and_tensor_are_functorial(cat):
    rng = random.Random(3)
    objs = [o for o in probe_objects(cat, 0, 4) if cat.size(o) > 0]
    for x in objs:
        for y in objs:
            f = cat.random_morphism(x, y, rng)
            g = cat.random_morphism(y, x, rng)
            assert cat.equal(cat.compose(f, cat.id(x)), f)
            assert cat.equal(cat.compose(cat.id(y), f), f)
            lhs = cat.tensor(cat.compose(g, f), cat.compose(f, g))
            rhs = cat.compose(cat.tensor(g, f), cat.tensor(f, g))
            assert cat.equal(lhs, rhs)


def test_graded_degree_check():
    even, odd = GradedSpace.of(1, 0), GradedSpace.of(0, 1)
    with pytest.raises(ContractViolation):
        GRVECT.mor(even, odd, M([[1]]))
    assert GRVECT.hom_basis(GradedSpace.of(1, 1), GradedSpace.of(1, 1))[0].mat == M([[1, 0], [0, 0]])
    assert len(GRVECT.hom_basis(GradedSpace.of(1, 1), GradedSpace.of(1, 1))) == 2


def test_finset_equalizer_is_no_larger_than_domain():
    for f in FINSET.all_morphisms(3, 2):
        for g in FINSET.all_morphisms(3, 2):
            e_obj, _ = FINSET.equalizer(f, g)
            assert e_obj <= 3


def test_zero_dimensional_objects():
    z = FINVECT.tensor_obj(0, 3)
    assert z == 0
    assert FINVECT.id(0).mat.shape == (0, 0)
    assert FINSET.tensor(FINSET.id(0), FINSET.id(2)) == FnMor(0, 0, ())
