from __future__ import annotations

import random

import pytest

from mayrmeyer.field import (Field, UnsupportedFieldError, enumerate_roots_of_unity,
                             primitive_root_of_unity, smallest_prime)


@pytest.mark.parametrize("p,d,root", [(5, 1, 1), (5, 4, 2), (7, 3, 2)])
def test_primitive_root(p, d, root):
    assert primitive_root_of_unity(Field(p), d) == root


@pytest.mark.parametrize("p,d,roots", [(5, 2, [1, 4]), (5, 1, [1]), (13, 3, [1, 3, 9])])
def test_enumerate_roots(p, d, roots):
    assert enumerate_roots_of_unity(Field(p), d) == roots


def test_missing_roots_raise():
    with pytest.raises(UnsupportedFieldError):
        primitive_root_of_unity(Field(5), 3)
    with pytest.raises(UnsupportedFieldError):
        Field(7, 4)


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        Field(15)


def test_roots_form_a_group():
    F = Field(97)
    for d in (2, 3, 4, 6, 8, 12):
        roots = enumerate_roots_of_unity(F, d)
        assert len(roots) == d
        assert all(pow(a, d, 97) == 1 for a in roots)
        assert all(a * b % 97 in roots for a in roots for b in roots)


def test_field_axioms_on_random_triples():
    F = Field(13)
    rng = random.Random(7)
    for _ in range(1000):
        a, b, c = (rng.randrange(13) for _ in range(3))
        assert F(F(a + b) + c) == F(a + F(b + c))
        assert F(F(a * b) * c) == F(a * F(b * c))
        assert F(a * F(b + c)) == F(F(a * b) + F(a * c))
        if a:
            assert F(a * F.inv(a)) == 1


def test_smallest_prime_is_one_mod_modulus():
    p = smallest_prime(4)
    assert p > 2 ** 15 and (p - 1) % 4 == 0
