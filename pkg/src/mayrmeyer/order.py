"""Monomial orders and the packed-integer monomial encoding used by the engine.

A monomial is encoded as a single Python int whose natural integer order is the
monomial order. The variables are split into blocks compared one after another;
each block contributes a degree field followed by complemented exponent fields
(``M - e``) of its variables, last variable most significant. Lex is the special
case of one-variable blocks, grevlex of a single block. The encoding is affine,
so monomial multiplication is ``a + b - ONE``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

FIELD_BITS = 16
MAX_EXP = (1 << (FIELD_BITS - 1)) - 1


class Comparison(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class MonomialOverflowError(OverflowError):
    pass


@dataclass(frozen=True)
class MonomialOrder:
    """``kind`` is ``lex``, ``grevlex`` or ``block``.

    A block order puts the variables at indices ``eliminate`` in a first block
    that is compared before the remaining variables; both blocks use ``inner``.
    """

    kind: str = "grevlex"
    eliminate: tuple[int, ...] = ()
    inner: str = "grevlex"

    def __post_init__(self) -> None:
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.inner not in ("lex", "grevlex"):
            raise ValueError(f"unknown inner order {self.inner!r}")
        object.__setattr__(self, "eliminate", tuple(sorted(set(self.eliminate))))

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def block(cls, eliminate: Sequence[int], inner: str = "grevlex") -> "MonomialOrder":
        return cls("block", tuple(eliminate), inner)

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        """``lex``, ``grevlex`` or ``block:<i,j,...>[:inner]``."""
        if text in ("lex", "grevlex"):
            return cls(text)
        parts = text.split(":")
        if parts[0] == "block" and len(parts) in (2, 3):
            idx = tuple(int(v) for v in parts[1].split(",") if v)
            return cls.block(idx, parts[2] if len(parts) == 3 else "grevlex")
        raise ValueError(f"cannot parse order {text!r}")

    def __str__(self) -> str:
        if self.kind == "block":
            return f"block:{','.join(map(str, self.eliminate))}:{self.inner}"
        return self.kind

    def blocks(self, nvars: int) -> list[list[int]]:
        if self.kind == "lex":
            return [[i] for i in range(nvars)]
        if self.kind == "grevlex":
            return [list(range(nvars))]
        if any(i >= nvars for i in self.eliminate):
            raise ValueError("eliminated variable index out of range")
        first = list(self.eliminate)
        rest = [i for i in range(nvars) if i not in set(first)]
        out: list[list[int]] = []
        for blk in (first, rest):
            if not blk:
                continue
            if self.inner == "lex":
                out.extend([i] for i in blk)
            else:
                out.append(blk)
        return out

    def sort_key(self, exps: Sequence[int]):
        key = []
        for blk in self.blocks(len(exps)):
            key.append(sum(exps[i] for i in blk))
            key.extend(-exps[i] for i in reversed(blk))
        return tuple(key)


def compare(order: MonomialOrder, a: Sequence[int], b: Sequence[int]) -> Comparison:
    if len(a) != len(b):
        raise ValueError("exponent vectors of different length")
    ka, kb = order.sort_key(a), order.sort_key(b)
    if ka < kb:
        return Comparison.LESS
    if ka > kb:
        return Comparison.GREATER
    return Comparison.EQUAL


class Encoder:
    """Packed-int monomials for one (order, number of variables) pair."""

    def __init__(self, order: MonomialOrder, nvars: int):
        self.order = order
        self.nvars = nvars
        self.var_pos = [0] * nvars
        self.deg_pos: list[int] = []
        self.blocks = order.blocks(nvars)
        pos = 0
        for blk in reversed(self.blocks):
            for i in blk:
                self.var_pos[i] = pos
                pos += FIELD_BITS
            self.deg_pos.insert(0, pos)
            pos += FIELD_BITS
        self.block_of = [0] * nvars
        for b, blk in enumerate(self.blocks):
            for i in blk:
                self.block_of[i] = b
        self.one = sum(MAX_EXP << q for q in self.var_pos)
        self.var_mask = sum(((1 << FIELD_BITS) - 1) << q for q in self.var_pos)
        self.guard = sum(1 << (q + FIELD_BITS - 1) for q in self.var_pos)
        self.var_unit = [(1 << self.deg_pos[self.block_of[i]]) - (1 << self.var_pos[i])
                         for i in range(nvars)]
        self.field_mask = (1 << FIELD_BITS) - 1

    def encode(self, exps: Sequence[int]) -> int:
        m = self.one
        for i, e in enumerate(exps):
            if e:
                if e > MAX_EXP:
                    raise MonomialOverflowError(f"exponent {e} exceeds {MAX_EXP}")
                m += e * self.var_unit[i]
        return m

    def decode(self, m: int) -> tuple[int, ...]:
        fm = self.field_mask
        return tuple(MAX_EXP - ((m >> q) & fm) for q in self.var_pos)

    def divides(self, a: int, u: int) -> bool:
        g = self.guard
        c = self.var_mask
        return (((a & c) | g) - (u & c)) & g == g

    def degree(self, m: int) -> int:
        fm = self.field_mask
        return sum((m >> q) & fm for q in self.deg_pos)
