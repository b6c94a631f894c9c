from __future__ import annotations

import pytest

from mayrmeyer.catalog import MM, MMParams, mayr_meyer_ideal
from mayrmeyer.ideal import (Ideal, UndefinedQuotientError, bounded_degree_representation, colon,
                             colon_ideal, contains, dimension, eliminate, equals, height, intersect,
                             is_member, radical_member, saturate, zero_ideal)


@pytest.fixture(scope="module")
def j22():
    params = MMParams.make(2, 2, 13)
    return MM(params), mayr_meyer_ideal(params)


def test_sum_and_product(xy):
    x, y = xy.gens()
    assert equals(Ideal([x]) + Ideal([y]), Ideal([x, y]))
    assert equals(Ideal([x]) * Ideal([y]), Ideal([x * y]))
    assert equals(Ideal([x]) + zero_ideal(xy), Ideal([x]))


def test_intersect_examples(xy):
    x, y = xy.gens()
    assert equals(intersect(Ideal([x]), Ideal([y])), Ideal([x * y]))
    I = Ideal([x ** 2 + y, x * y])
    assert equals(intersect(I, I), I)
    assert equals(intersect(Ideal([x ** 2]), Ideal([x])), Ideal([x ** 2]))
    assert equals(intersect(Ideal([xy.one()]), I), I)


def test_colon_examples(xy):
    x, y = xy.gens()
    assert equals(colon(Ideal([x * y, x ** 2]), x), Ideal([x, y]))
    I = Ideal([x ** 2 - y, x * y])
    assert equals(colon(I, xy.one()), I)
    with pytest.raises(UndefinedQuotientError):
        colon(I, xy.zero())
    assert equals(colon_ideal(Ideal([x * y, x ** 2, y ** 2]), Ideal([x, y])), Ideal([x, y]))


def test_saturate_examples(xy):
    x, y = xy.gens()
    S, k = saturate(Ideal([x ** 2 * y, x * y ** 2]), x)
    assert equals(S, Ideal([y])) and k == 2
    I = Ideal([x ** 2 + y])
    assert saturate(I, y + 1) == (I, 0)


def test_eliminate_examples(xyz):
    x, y, z = xyz.gens()
    assert equals(eliminate(Ideal([x - z ** 2, x * z]), ["x"]), Ideal([z ** 3]))
    I = Ideal([x - y])
    assert eliminate(I, []) is I
    assert eliminate(I, ["x"]).is_zero()
    J = Ideal([x - y ** 2, y - z ** 3])
    assert equals(eliminate(eliminate(J, ["x"]), ["y"]), eliminate(J, ["x", "y"]))


def test_equals_contains(xy):
    x, y = xy.gens()
    assert equals(Ideal([x, y]), Ideal([y, x + y]))
    assert contains(Ideal([x, y]), Ideal([x * y]))
    assert not contains(Ideal([x * y]), Ideal([x]))


def test_radical_member(xy):
    x, y = xy.gens()
    assert radical_member(x, Ideal([x ** 2]))
    assert not radical_member(1 + x, Ideal([x]))


def test_bounded_degree_representation(xy):
    x, y = xy.gens()
    gens = [x ** 2 - y, x * y]
    rep = bounded_degree_representation(gens[0], gens, 0)
    assert rep is not None and rep[0] == xy.one() and rep[1].is_zero()
    assert bounded_degree_representation(xy.one(), Ideal([x]), 4) is None
    f = (x + 1) * gens[0] + y * gens[1]
    rep = bounded_degree_representation(f, gens, 1)
    assert sum((a * g for a, g in zip(rep, gens)), xy.zero()) == f


def test_dimension_height(j22):
    m, _ = j22
    assert dimension(zero_ideal(m.table)) == 18
    assert height(m.I(m.C(0))) == 4
    assert height(m.I([m.s, m.f])) == 2
    assert dimension(m.I([m.table.one()])) == -1


def test_mayr_meyer_membership(j22):
    m, J = j22
    c, b = m.c, m.b
    assert is_member(m.f * c(0, 1) - m.s * c(0, 2), J)
    probe = m.s * c(0, 2) * (b(0, 1) - b(0, 4))
    assert not is_member(probe, J)
    assert radical_member(probe, J)


def test_colon_contains_original(j22):
    m, J = j22
    for w in (m.s, m.c(0, 2), m.f):
        assert contains(colon(J, w), J)
