from __future__ import annotations

import pytest

from mayrmeyer.order import Comparison, MonomialOrder, compare


def test_lex_example():
    assert compare(MonomialOrder.lex(), (2, 1), (1, 3)) is Comparison.GREATER


def test_grevlex_example():
    assert compare(MonomialOrder.grevlex(), (1, 0, 1), (0, 2, 0)) is Comparison.LESS


@pytest.mark.parametrize("order", [MonomialOrder.lex(), MonomialOrder.grevlex(), MonomialOrder.block([0])])
def test_equal(order):
    assert compare(order, (1, 2, 3), (1, 2, 3)) is Comparison.EQUAL


def test_length_mismatch():
    with pytest.raises(ValueError):
        compare(MonomialOrder.lex(), (1, 2), (1, 2, 3))


def test_block_order_eliminates():
    order = MonomialOrder.block([2])
    assert compare(order, (0, 0, 1), (9, 9, 0)) is Comparison.GREATER


def test_parse_round_trip():
    for text in ("lex", "grevlex", "block:0,2:grevlex", "block:1:lex"):
        assert str(MonomialOrder.parse(text)) == text
    with pytest.raises(ValueError):
        MonomialOrder.parse("weird")
