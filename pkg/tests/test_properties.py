from __future__ import annotations

import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from mayrmeyer import formats
from mayrmeyer.field import Field
from mayrmeyer.groebner import buchberger
from mayrmeyer.ideal import Ideal, colon, contains, equals, intersect, is_member, saturate
from mayrmeyer.order import Comparison, MonomialOrder, compare
from mayrmeyer.poly import Polynomial, VarTable, parse_poly, print_poly
from mayrmeyer.verifier import _random_ideal, _random_poly, fact_tables

SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
ORDERS = [MonomialOrder.lex(), MonomialOrder.grevlex(), MonomialOrder.block([0, 2]),
          MonomialOrder.block([3], "lex")]
TABLE = VarTable(["x", "y", "z", "w"], Field(13))

monomials = st.tuples(*[st.integers(0, 6)] * 4)
orders = st.sampled_from(ORDERS)
seeds = st.integers(0, 2 ** 32)


def random_setup(seed: int):
    rng = random.Random(seed)
    small, big = fact_tables(13)
    table = small if rng.random() < 0.5 else big
    return rng, table, list(range(len(table)))


polys = st.dictionaries(monomials, st.integers(1, 12), max_size=6).map(lambda t: Polynomial(TABLE, t))


# -- orders -------------------------------------------------------------------

@given(orders, monomials, monomials, monomials)
@settings(max_examples=300, deadline=None)
def test_order_axioms(order, a, b, c):
    ab = compare(order, a, b)
    assert ab is not compare(order, b, a) or ab is Comparison.EQUAL
    assert (ab is Comparison.EQUAL) == (a == b)
    ac, bc = tuple(x + y for x, y in zip(a, c)), tuple(x + y for x, y in zip(b, c))
    assert compare(order, ac, bc) is ab
    assert compare(order, a, (0, 0, 0, 0)) is not Comparison.LESS


@given(monomials, monomials)
def test_block_order_puts_eliminated_first(a, b):
    order = MonomialOrder.block([0, 2])
    if (a[0] or a[2]) and not (b[0] or b[2]):
        assert compare(order, a, b) is Comparison.GREATER


@given(orders, monomials, monomials, monomials)
@settings(max_examples=200, deadline=None)
def test_order_transitive(order, a, b, c):
    if compare(order, a, b) is Comparison.LESS and compare(order, b, c) is Comparison.LESS:
        assert compare(order, a, c) is Comparison.LESS


# -- polynomials and files ---------------------------------------------------------

@given(polys, orders)
@settings(max_examples=500, deadline=None)
def test_print_parse_round_trip(f, order):
    assert parse_poly(print_poly(f, order), TABLE) == f


@given(st.lists(polys, max_size=5))
def test_ideal_file_round_trip(gens):
    I = Ideal(gens, TABLE)
    back, _ = formats.loads_ideal(formats.dumps_ideal(I))
    assert back.generators == I.generators


@given(st.lists(polys, max_size=5), st.sampled_from(["singular", "macaulay2"]))
def test_cas_round_trip(gens, dialect):
    I = Ideal(gens, TABLE)
    assert formats.from_cas_script(formats.to_cas_script(I, dialect), dialect).generators == I.generators


# -- Groebner bases --------------------------------------------------------------

@given(seeds, st.randoms(use_true_random=False))
@SETTINGS
def test_gb_permutation_invariant(seed, shuffler):
    rng, table, vs = random_setup(seed)
    gens = list(_random_ideal(rng, table, vs).generators)
    base = buchberger(gens).generators
    shuffler.shuffle(gens)
    assert buchberger(gens).generators == base


@given(seeds)
@SETTINGS
def test_generators_reduce_to_zero(seed):
    rng, table, vs = random_setup(seed)
    I = _random_ideal(rng, table, vs)
    B = I.gb()
    assert all(B.normal_form(g).is_zero() for g in I.generators)


# -- the Facts ---------------------------------------------------------------------

@given(seeds)
@SETTINGS
def test_modular_law(seed):
    rng, table, vs = random_setup(seed)
    I, I1, extra = (_random_ideal(rng, table, vs) for _ in range(3))
    I2 = I + extra
    assert equals(intersect(I + I1, I2), I + intersect(I1, I2))


@given(seeds)
@SETTINGS
def test_principal_intersection(seed):
    rng, table, vs = random_setup(seed)
    I = _random_ideal(rng, table, vs)
    x = _random_poly(rng, table, vs, 2, 2)
    assert equals(intersect(Ideal([x]), I), Ideal([x]) * colon(I, x))


@given(seeds)
@SETTINGS
def test_colon_of_sum(seed):
    rng, table, vs = random_setup(seed)
    I, I1 = _random_ideal(rng, table, vs), _random_ideal(rng, table, vs)
    x = _random_poly(rng, table, vs, 2, 2)
    assert equals(colon(I + Ideal([x * g for g in I1.generators]), x), colon(I, x) + I1)


@given(seeds)
@SETTINGS
def test_saturation_split(seed):
    rng, table, vs = random_setup(seed)
    I = _random_ideal(rng, table, vs)
    x = _random_poly(rng, table, vs, 2, 2)
    S, k = saturate(I, x)
    assert equals(I, intersect(S, I + Ideal([x ** k])))
    assert saturate(S, x)[1] == 0


@given(seeds)
@SETTINGS
def test_disjoint_variables(seed):
    rng, table, vs = random_setup(seed)
    half = rng.randint(1, len(vs) - 1)
    A, B = _random_ideal(rng, table, vs[:half]), _random_ideal(rng, table, vs[half:])
    assert equals(intersect(A, B), A * B)


@given(seeds)
@SETTINGS
def test_colon_contains_original(seed):
    rng, table, vs = random_setup(seed)
    I = _random_ideal(rng, table, vs)
    x = _random_poly(rng, table, vs, 2, 2)
    assert contains(colon(I, x), I)
    assert is_member(x, I) == colon(I, x).is_unit()
