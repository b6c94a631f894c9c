"""Variable tables, sparse polynomials over F_p, and the text grammar."""
from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

from .field import Field
from .order import MAX_EXP, MonomialOrder, MonomialOverflowError

Monomial = tuple  # exponent vector, one entry per variable of the table


class RingMismatchError(ValueError):
    """Operands live in different rings."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class VarTable:
    """Ordered variable names plus the coefficient field; together they define a ring."""

    def __init__(self, names: Sequence[str], field: Field, n: int | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        for name in names:
            if not _NAME.match(name):
                raise ValueError(f"bad variable name {name!r}")
        self.names = names
        self.field = field
        self.n = n
        self.index = {name: i for i, name in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other: object) -> bool:
        # the ring is fixed by the names and p; the field's unity tag is metadata
        return (isinstance(other, VarTable) and self.names == other.names
                and self.field.p == other.field.p)

    def __hash__(self) -> int:
        return hash((self.names, self.field.p))

    def __repr__(self) -> str:
        return f"VarTable({len(self.names)} vars over F_{self.field.p})"

    @property
    def p(self) -> int:
        return self.field.p

    def gen(self, name: str) -> "Polynomial":
        try:
            i = self.index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None
        exps = [0] * len(self.names)
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(v) for v in self.names]

    def __getitem__(self, name: str) -> "Polynomial":
        return self.gen(name)

    def const(self, c: int) -> "Polynomial":
        return Polynomial(self, {(0,) * len(self.names): c})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def extend(self, extra: Sequence[str], front: bool = False) -> "VarTable":
        names = tuple(extra) + self.names if front else self.names + tuple(extra)
        return VarTable(names, self.field, self.n)

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)


class Polynomial:
    """Immutable sparse polynomial: exponent tuple -> nonzero residue mod p."""

    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table: VarTable, terms: Mapping[Monomial, int] | None = None,
                 *, _clean: bool = False):
        self.table = table
        if _clean:
            self.terms = dict(terms) if terms else {}
        else:
            p = table.p
            out: dict = {}
            for m, c in (terms or {}).items():
                c %= p
                if c:
                    out[tuple(m)] = c
            self.terms = out
        self._hash = None

    # -- structure -----------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.table != self.table:
                raise RingMismatchError("polynomials from different rings")
            return other
        if isinstance(other, int):
            return self.table.const(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.table.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def variables(self) -> set[str]:
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.table.names[i])
        return used

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def leading(self, order: MonomialOrder) -> tuple[Monomial, int]:
        m = max(self.terms, key=order.sort_key)
        return m, self.terms[m]

    # -- arithmetic ----------------------------------------------------
    def __neg__(self) -> "Polynomial":
        p = self.table.p
        return Polynomial(self.table, {m: p - c for m, c in self.terms.items()}, _clean=True)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.table.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.table, out, _clean=True)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.table.p
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = (out.get(m, 0) + c1 * c2) % p
        for m in [m for m, c in out.items() if not c]:
            del out[m]
        for m in out:
            if max(m, default=0) > MAX_EXP:
                raise MonomialOverflowError("exponent overflow in product")
        return Polynomial(self.table, out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = self.table.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading(order or MonomialOrder.grevlex())
        inv = self.table.field.inv(c)
        p = self.table.p
        return Polynomial(self.table, {m: v * inv % p for m, v in self.terms.items()}, _clean=True)

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises ValueError if a remainder is left."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        order = MonomialOrder.grevlex()
        lm, lc = divisor.leading(order)
        inv = self.table.field.inv(lc)
        p = self.table.p
        rem = dict(self.terms)
        quot: dict = {}
        key = order.sort_key
        while rem:
            m = max(rem, key=key)
            if any(a < b for a, b in zip(m, lm)):
                raise ValueError("division leaves a remainder")
            q = tuple(a - b for a, b in zip(m, lm))
            c = rem[m] * inv % p
            quot[q] = c
            for dm, dc in divisor.terms.items():
                mm = tuple(a + b for a, b in zip(q, dm))
                v = (rem.get(mm, 0) - c * dc) % p
                if v:
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return Polynomial(self.table, quot, _clean=True)

    def substitute(self, values: Mapping[str, int]) -> "Polynomial":
        """Set the named variables to field constants."""
        p = self.table.p
        idx = {self.table.index[v]: c for v, c in values.items()}
        out: dict = {}
        for m, c in self.terms.items():
            m2 = list(m)
            for i, val in idx.items():
                if m2[i]:
                    c = c * pow(val, m2[i], p) % p
                    m2[i] = 0
            t = tuple(m2)
            out[t] = (out.get(t, 0) + c) % p
        return Polynomial(self.table, out)

    def embed(self, table: VarTable) -> "Polynomial":
        """Same polynomial in a table containing all variables that occur."""
        if table == self.table:
            return self
        mapping = [table.index[name] for name in self.table.names]
        n = len(table)
        out = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                if k:
                    e[mapping[i]] = k
            out[tuple(e)] = c
        return Polynomial(table, out, _clean=True)

    def restrict(self, table: VarTable) -> "Polynomial":
        """Drop to a smaller table; every occurring variable must survive."""
        out = {}
        for m, c in self.terms.items():
            e = [0] * len(table)
            for i, k in enumerate(m):
                if k:
                    name = self.table.names[i]
                    if name not in table.index:
                        raise ValueError(f"variable {name} occurs but is dropped")
                    e[table.index[name]] = k
            out[tuple(e)] = c
        return Polynomial(table, out, _clean=True)

    # -- text ----------------------------------------------------------
    def to_str(self, order: MonomialOrder | None = None) -> str:
        return print_poly(self, order)

    def __str__(self) -> str:
        return print_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({print_poly(self)!r})"


def monomial_str(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(names[i])
        elif e > 1:
            parts.append(f"{names[i]}^{e}")
    return "*".join(parts)


def print_poly(f: Polynomial, order: MonomialOrder | None = None) -> str:
    """Canonical text: terms in decreasing order, coefficients in (-p/2, p/2]."""
    if not f.terms:
        return "0"
    order = order or MonomialOrder.grevlex()
    field = f.table.field
    out = []
    for m in sorted(f.terms, key=order.sort_key, reverse=True):
        c = field.signed(f.terms[m])
        mono = monomial_str(m, f.table.names)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = mt.start(mt.lastgroup)
        tokens.append((mt.lastgroup, mt.group(mt.lastgroup), start))
        pos = mt.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_poly(text: str, table: VarTable) -> Polynomial:
    """Parse ``coeff*var^k*... +/- ...`` into a polynomial of ``table``."""
    tokens = _tokenize(text)
    i = 0
    nv = len(table)
    p = table.p
    terms: dict = {}

    def peek():
        return tokens[i]

    first = True
    while True:
        kind, val, pos = peek()
        sign = 1
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            if kind == "end":
                break
            raise ParseError(f"expected '+' or '-', got {val!r}", pos)
        elif kind == "end":
            raise ParseError("empty polynomial", pos)
        first = False
        coeff = 1
        exps = [0] * nv
        kind, val, pos = peek()
        if kind == "num":
            coeff = int(val)
            i += 1
            if peek()[0] == "op" and peek()[1] == "*":
                i += 1
                kind, val, pos = peek()
                if kind != "name":
                    raise ParseError("expected variable after '*'", pos)
            else:
                kind = None
        if kind == "name":
            while True:
                kind, val, pos = peek()
                if kind != "name":
                    raise ParseError(f"expected variable, got {val!r}", pos)
                if val not in table.index:
                    raise ParseError(f"unknown variable {val!r}", pos)
                i += 1
                e = 1
                if peek()[0] == "op" and peek()[1] == "^":
                    i += 1
                    k2, v2, p2 = peek()
                    if k2 != "num":
                        raise ParseError("expected exponent after '^'", p2)
                    e = int(v2)
                    if e > MAX_EXP:
                        raise ParseError("exponent too large", p2)
                    i += 1
                exps[table.index[val]] += e
                if peek()[0] == "op" and peek()[1] == "*":
                    i += 1
                    continue
                break
        elif kind is not None:
            raise ParseError(f"unexpected token {val!r}", pos)
        m = tuple(exps)
        terms[m] = (terms.get(m, 0) + sign * coeff) % p
        kind, val, pos = peek()
        if kind == "end":
            break
        if not (kind == "op" and val in "+-"):
            raise ParseError(f"unexpected token {val!r}", pos)
    return Polynomial(table, terms)


def product(polys: Iterable[Polynomial], table: VarTable) -> Polynomial:
    out = table.one()
    for f in polys:
        out = out * f
    return out
