from __future__ import annotations

import pytest

from mayrmeyer.catalog import MMParams, build_ring
from mayrmeyer.field import Field
from mayrmeyer.poly import ParseError, RingMismatchError, VarTable, parse_poly, print_poly


def test_generator_parse():
    table = build_ring(MMParams.make(2, 2, 13))
    g = parse_poly("c02*b01 - c03*b04", table)
    assert len(g) == 2


def test_zero():
    table = VarTable(["x"], Field(5))
    assert parse_poly("0", table).is_zero()
    assert print_poly(parse_poly("0", table)) == "0"


def test_coefficients_reduced():
    table = VarTable(["b01", "b02"], Field(5))
    assert parse_poly("b01^2 - b02^2", table).terms == {(2, 0): 1, (0, 2): 4}


def test_parse_errors_carry_position():
    table = VarTable(["x", "y"], Field(5))
    with pytest.raises(ParseError) as err:
        parse_poly("x + q", table)
    assert err.value.position == 4
    with pytest.raises(ParseError):
        parse_poly("x +* y", table)


def test_ring_mismatch():
    a = VarTable(["x"], Field(5)).gen("x")
    b = VarTable(["x"], Field(7)).gen("x")
    with pytest.raises(RingMismatchError):
        a + b


def test_two_digit_levels():
    table = build_ring(MMParams.make(11, 2, 13))
    assert "b10_2" in table.names and len(table) == 90
    assert str(parse_poly("b10_2*c10_1 - 1", table)) in ("c10_1*b10_2 - 1", "b10_2*c10_1 - 1")


def test_arithmetic(xy):
    x, y = xy.gens()
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert ((x + y) * (x - y)).exact_div(x - y) == x + y
    assert (x - x).is_zero() and not (x - x)
    assert (x * y).degree() == 2
