from __future__ import annotations

import random

import pytest

from mayrmeyer.groebner import BudgetExceeded, buchberger, normal_form, spair_budget
from mayrmeyer.order import MonomialOrder

LEX = MonomialOrder.lex()


def test_normal_form_examples(xy):
    x, y = xy.gens()
    assert normal_form(x ** 3, buchberger([x ** 2 - y], LEX)) == x * y
    g = x ** 2 + y
    assert normal_form(g, buchberger([g, y ** 3], LEX)).is_zero()
    assert normal_form(xy.one(), buchberger([x, y], LEX)) == xy.one()


def test_buchberger_examples(xy):
    x, y = xy.gens()
    assert buchberger([x - y], LEX).generators == (x - y,)
    assert set(buchberger([x ** 2 - y, y ** 2 - x], LEX).generators) == {x - y ** 2, y ** 4 - y}
    assert len(buchberger([], LEX, xy)) == 0


def test_reduced_basis_properties(xyz):
    x, y, z = xyz.gens()
    gens = [x * y - z ** 2, y ** 2 * z - x, x ** 2 * z + y]
    B = buchberger(gens)
    lms = B.leading_monomials()
    for g in gens:
        assert normal_form(g, B).is_zero()
    for i, g in enumerate(B.generators):
        assert g.leading(B.order)[1] == 1
        for m in g.terms:
            for j, lm in enumerate(lms):
                if j != i:
                    assert not all(a >= b for a, b in zip(m, lm))


def test_shuffle_determinism(xyz):
    x, y, z = xyz.gens()
    gens = [x * y - z ** 2, y ** 2 * z - x, x ** 2 * z + y, x + y + z]
    base = buchberger(gens).generators
    rng = random.Random(3)
    for _ in range(10):
        rng.shuffle(gens)
        assert buchberger(gens).generators == base


def test_budget(xyz):
    x, y, z = xyz.gens()
    gens = [x ** 3 - y * z, y ** 3 - x * z, z ** 3 - x * y, x * y * z - 1]
    with pytest.raises(BudgetExceeded):
        buchberger(gens, budget=1)
    with spair_budget(1):
        with pytest.raises(BudgetExceeded):
            buchberger(gens)
    assert len(buchberger(gens)) > 0
