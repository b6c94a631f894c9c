"""Constructors for the Mayr-Meyer family J(n,d), the companion family K(n,d),
their auxiliary ideals, the minimal primes and the embedded-prime candidates."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .field import Field, enumerate_roots_of_unity, smallest_prime
from .ideal import Ideal, zero_ideal
from .poly import Polynomial, VarTable, product

SUBSETS = [frozenset(c) for k in range(5) for c in itertools.combinations((1, 2, 3, 4), k)]
NONEMPTY = [L for L in SUBSETS if L]


class ParameterError(ValueError):
    pass


def var_name(kind: str, r: int, i: int) -> str:
    return f"{kind}{r}{i}" if r < 10 else f"{kind}{r}_{i}"


def root_modulus(n: int, d: int) -> int:
    """Largest root order any catalog family at (n, d) asks for: d^(2^(n-2))."""
    return d ** (2 ** max(n - 2, 0))


@dataclass(frozen=True)
class MMParams:
    n: int
    d: int
    field: Field = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ParameterError("n must be at least 2")
        if self.d < 2:
            raise ParameterError("d must be at least 2")
        if self.field is None:
            object.__setattr__(self, "field", Field(smallest_prime(root_modulus(self.n, self.d)), self.d))
        elif (self.field.p - 1) % self.d:
            raise ParameterError(f"d = {self.d} does not divide p - 1 = {self.field.p - 1}")
        elif self.field.p % self.d == 0:
            raise ParameterError("characteristic divides d")

    @classmethod
    def make(cls, n: int, d: int, p: int | None = None) -> "MMParams":
        return cls(n, d, Field(p, d) if p is not None else None)

    @property
    def p(self) -> int:
        return self.field.p

    def supports_roots(self, order: int) -> bool:
        return (self.p - 1) % order == 0


def build_ring(params: MMParams) -> VarTable:
    """k[s, f, c_ri, b_ri | r < n, i = 1..4] in canonical order (8n + 2 variables)."""
    return _ring(params.n, params.field)


@lru_cache(maxsize=None)
def _ring(n: int, fld: Field) -> VarTable:
    names = ["s", "f"]
    for r in range(n):
        names += [var_name("c", r, i) for i in range(1, 5)]
        names += [var_name("b", r, i) for i in range(1, 5)]
    return VarTable(names, fld, n)


class MM:
    """Shorthand for the variables of R with the convention c_ni = b_ni = 1."""

    def __init__(self, params: MMParams):
        self.params = params
        self.n, self.d = params.n, params.d
        self.table = build_ring(params)
        self.one = self.table.one()
        self.s = self.table.gen("s")
        self.f = self.table.gen("f")

    def c(self, r: int, i: int) -> Polynomial:
        if r == self.n:
            return self.one
        if not 0 <= r < self.n:
            raise ParameterError(f"level {r} out of range")
        return self.table.gen(var_name("c", r, i))

    def b(self, r: int, i: int) -> Polynomial:
        if r == self.n:
            return self.one
        if not 0 <= r < self.n:
            raise ParameterError(f"level {r} out of range")
        return self.table.gen(var_name("b", r, i))

    def I(self, gens: Iterable[Polynomial], name: str | None = None) -> Ideal:
        return Ideal(list(gens), self.table, name)

    def const(self, a: int) -> Polynomial:
        return self.table.const(a)

    def cprod(self, lo: int, hi: int, i: int = 1) -> Polynomial:
        """c_{lo,i} c_{lo+1,i} ... c_{hi,i}; empty product is 1."""
        return product((self.c(k, i) for k in range(lo, hi + 1)), self.table)

    def bprod(self, lo: int, hi: int, i: int) -> Polynomial:
        return product((self.b(k, i) for k in range(lo, hi + 1)), self.table)

    # -- basic auxiliary ideals -----------------------------------------
    def C(self, r: int) -> list[Polynomial]:
        if r == self.n:
            return []
        return [self.c(r, i) for i in range(1, 5)]

    def D(self, r: int) -> list[Polynomial]:
        c, d = self.c, self.d
        if r == self.n:
            return []
        if r == 0:
            return [c(0, 4) - c(0, 1), c(0, 3) - c(0, 2), c(0, 1) - c(0, 2) * self.b(0, 1) ** d]
        return [c(r, 4) - c(r, 1), c(r, 3) - c(r, 2), c(r, 2) - c(r, 1)]

    def Bk(self, k: int, r: int) -> list[Polynomial]:
        """(1 - b_ji | j = k..r); zero when the range is empty or hits the top level."""
        out = []
        for j in range(max(k, 2), r + 1):
            if j >= self.n:
                continue
            out += [1 - self.b(j, i) for i in range(1, 5)]
        return out

    def B(self, r: int) -> list[Polynomial]:
        return self.Bk(2, r)

    def E(self) -> list[Polynomial]:
        b, d = self.b, self.d
        return [self.s - self.f * b(0, 1) ** d, b(0, 1) - b(0, 4),
                b(0, 2) ** d - b(0, 3) ** d, b(0, 1) ** d - b(0, 2) ** d]

    def F(self) -> list[Polynomial]:
        b, d = self.b, self.d
        return [b(0, 2) - b(1, 1) * b(0, 3), b(1, 4) - b(1, 1), b(1, 3) - b(1, 1),
                b(1, 2) - b(1, 1), b(1, 2) ** d - 1]

    def p_(self, r: int) -> list[Polynomial]:
        """Generators of p_r for r >= 0 (p_0 = C_0)."""
        if r == 0:
            return self.C(0)
        if r == 1:
            return self.C(1) + self.E() + self.D(0)
        out = self.C(r) + self.E() + self.F() + self.B(r - 1)
        for k in range(r):
            out += self.D(k)
        return out

    def T(self, r: int) -> list[Polynomial]:
        out = [self.s, self.f]
        for k in range(r + 1):
            out += self.C(k)
        for t in range(r):
            out += [self.b(t, i) for i in range(1, 5)]
        return out


# ---------------------------------------------------------------------------
# the two families


def mayr_meyer_generators(params: MMParams) -> list[tuple[str, Polynomial]]:
    """Named generators h_ri of J(n, d), in the order they are listed."""
    m = MM(params)
    n, d = m.n, m.d
    s, f, c, b = m.s, m.f, m.c, m.b
    gens = [(f"h0{i}", c(0, i) * (s - f * b(0, i) ** d)) for i in range(1, 5)]
    gens += [
        ("h13", f * c(0, 1) - s * c(0, 2)),
        ("h14", f * c(0, 4) - s * c(0, 3)),
        ("h15", s * (c(0, 3) - c(0, 2))),
        ("h16", f * (c(0, 2) * b(0, 1) - c(0, 3) * b(0, 4))),
    ]
    gens += [(f"h1,{6 + i}", f * c(0, 2) * c(1, i) * (b(0, 2) - b(1, i) * b(0, 3)))
             for i in range(1, 5)]
    for r in range(2, n + 1):
        pre = s * m.cprod(0, r - 3)
        gens += [
            (f"h{r}3", pre * (c(r - 2, 4) * c(r - 1, 1) - c(r - 2, 1) * c(r - 1, 2))),
            (f"h{r}4", pre * (c(r - 2, 4) * c(r - 1, 4) - c(r - 2, 1) * c(r - 1, 3))),
            (f"h{r}5", pre * c(r - 2, 1) * (c(r - 1, 3) - c(r - 1, 2))),
            (f"h{r}6", pre * c(r - 2, 4) * (c(r - 1, 2) * b(r - 1, 1) - c(r - 1, 3) * b(r - 1, 4))),
        ]
        if r <= n - 1:
            gens += [(f"h{r},{6 + i}",
                      pre * c(r - 2, 4) * c(r - 1, 2) * c(r, i) * (b(r - 1, 2) - b(r, i) * b(r - 1, 3)))
                     for i in range(1, 5)]
    pre = s * m.cprod(0, n - 3)
    gens.append((f"h{n}7", pre * c(n - 2, 4) * c(n - 1, 2) * (b(n - 1, 2) - b(n - 1, 3))))
    return gens


def mayr_meyer_ideal(params: MMParams) -> Ideal:
    return Ideal([g for _, g in mayr_meyer_generators(params)], build_ring(params), "J")


def k_family_generators(params: MMParams) -> list[tuple[str, Polynomial]]:
    """Named generators g of K(n, d); the generic level-r block starts at r = 3."""
    m = MM(params)
    n, d = m.n, m.d
    c, b = m.c, m.b
    b01d, b04d = b(0, 1) ** d, b(0, 4) ** d
    gens = [("g01", b(0, 1) * b(0, 3) ** d - b(0, 4) * b(0, 2) ** d)]
    gens += [(f"g1{i}", c(1, i) * (b(0, 2) - b(1, i) * b(0, 3))) for i in range(1, 5)]
    gens += [(f"g1{4 + i}", c(1, i) * (b(0, 1) - b(1, i) ** d * b(0, 4))) for i in range(1, 5)]
    gens += [(f"g1{i}{j}", c(1, i) * c(1, j) * (b(1, i) - b(1, j)))
             for i, j in itertools.combinations(range(1, 5), 2)]
    gens += [
        ("g21", b04d * c(1, 1) - b01d * c(1, 2)),
        ("g22", b04d * c(1, 4) - b01d * c(1, 3)),
        ("g23", b01d * (c(1, 2) - c(1, 3))),
        ("g24", b04d * (c(1, 2) * b(1, 1) - c(1, 3) * b(1, 4))),
    ]
    if n > 2:
        gens += [(f"g2{4 + i}", b04d * c(1, 2) * c(2, i) * (b(1, 2) - b(2, i) * b(1, 3)))
                 for i in range(1, 5)]
    else:
        # the printed c_2i factor has no level-2 variable to refer to when n = 2
        gens.append(("g25", b04d * c(1, 2) * (b(1, 2) - b(1, 3))))
    for r in range(3, n + 1):
        pre = b01d * m.cprod(1, r - 3)
        gens += [
            (f"g{r}1", pre * (c(r - 2, 4) * c(r - 1, 1) - c(r - 2, 1) * c(r - 1, 2))),
            (f"g{r}2", pre * (c(r - 2, 4) * c(r - 1, 4) - c(r - 2, 1) * c(r - 1, 3))),
            (f"g{r}3", pre * c(r - 2, 1) * (c(r - 1, 3) - c(r - 1, 2))),
            (f"g{r}4", pre * c(r - 2, 4) * (c(r - 1, 2) * b(r - 1, 1) - c(r - 1, 3) * b(r - 1, 4))),
        ]
        if r <= n - 1:
            gens += [(f"g{r},{4 + i}",
                      pre * c(r - 2, 4) * c(r - 1, 2) * c(r, i) * (b(r - 1, 2) - b(r, i) * b(r - 1, 3)))
                     for i in range(1, 5)]
    if n > 2:
        pre = b01d * m.cprod(1, n - 3)
        gens.append((f"g{n}5", pre * c(n - 2, 4) * c(n - 1, 2) * (b(n - 1, 2) - b(n - 1, 3))))
    return gens


def k_family_ideal(params: MMParams) -> Ideal:
    return Ideal([g for _, g in k_family_generators(params)], build_ring(params), "K(n,d)")


# ---------------------------------------------------------------------------
# auxiliary ideals


def _j2_generators(params: MMParams) -> list[Polynomial]:
    """h_rj / s for r >= 2."""
    m = MM(params)
    return [g.exact_div(m.s) for name, g in mayr_meyer_generators(params) if _generator_level(name) >= 2]


def _generator_level(name: str) -> int:
    body = name[1:]
    if "," in body:
        return int(body.split(",")[0])
    return int(body[:-1])


def j2_prime_generators(params: MMParams) -> list[Polynomial]:
    """J2 with c01 -> c02 b01^d, c03 -> c02, c04 -> c02 b04^d."""
    m = MM(params)
    d = m.d
    sub = {"c01": m.c(0, 2) * m.b(0, 1) ** d, "c03": m.c(0, 2), "c04": m.c(0, 2) * m.b(0, 4) ** d}
    return [subs(g, sub) for g in _j2_generators(params)]


def j2_double_prime_generators(params: MMParams) -> list[Polynomial]:
    """h_rj (r >= 2) with s = c01 = c04 = 1."""
    m = MM(params)
    out = []
    for name, g in mayr_meyer_generators(params):
        if _generator_level(name) >= 2:
            out.append(subs(g, {"s": m.one, "c01": m.one, "c04": m.one}))
    return out


def j2_triple_prime_generators(params: MMParams) -> list[Polynomial]:
    """J2''' with J2'' = D_1 + c11 J2''': reduce modulo D_1 (c12, c13, c14 -> c11), divide by c11."""
    m = MM(params)
    c11 = m.c(1, 1)
    sub = {"c12": c11, "c13": c11, "c14": c11}
    out = []
    for g in j2_double_prime_generators(params):
        h = subs(g, sub)
        if h.is_zero():
            continue
        out.append(h.exact_div(c11))
    return out


def subs(g: Polynomial, values: dict) -> Polynomial:
    """Substitute polynomials (or ints) for named variables."""
    table = g.table
    idx = {table.index[k]: (v if isinstance(v, Polynomial) else table.const(v)) for k, v in values.items()}
    out = table.zero()
    powcache: dict = {}
    for mono, coef in g.terms.items():
        rest = list(mono)
        term = table.const(coef)
        for i, val in idx.items():
            e = rest[i]
            if e:
                key = (i, e)
                if key not in powcache:
                    powcache[key] = val ** e
                term = term * powcache[key]
                rest[i] = 0
        out = out + term * Polynomial(table, {tuple(rest): 1}, _clean=True)
    return out


def aux_ideal(name: str, params: MMParams, r: int | None = None, k: int | None = None) -> Ideal:
    """E, F, C, D, B, Bk, p, T, J2, J2', J2'', J2'''."""
    m = MM(params)
    n = m.n

    def need_r(lo: int, hi: int) -> int:
        if r is None or not lo <= r <= hi:
            raise ParameterError(f"{name} needs an index in [{lo}, {hi}], got {r}")
        return r

    if name == "E":
        gens = m.E()
    elif name == "F":
        gens = m.F()
    elif name == "C":
        gens = m.C(need_r(0, n))
    elif name == "D":
        gens = m.D(need_r(0, n))
    elif name == "B":
        rr = need_r(0, n - 1)
        gens = [] if rr <= 1 else m.B(rr)
    elif name == "Bk":
        rr = need_r(0, n)
        if k is None:
            raise ParameterError("Bk needs k")
        gens = m.Bk(k, rr)
    elif name == "p":
        gens = m.p_(need_r(0, n))
    elif name == "T":
        gens = m.T(need_r(0, n - 1))
    elif name == "J2":
        gens = _j2_generators(params)
    elif name == "J2'":
        gens = j2_prime_generators(params)
    elif name == "J2''":
        gens = j2_double_prime_generators(params)
    elif name == "J2'''":
        gens = j2_triple_prime_generators(params)
    else:
        raise ParameterError(f"unknown auxiliary ideal {name!r}")
    label = name if r is None else f"{name}_{r}" if k is None else f"{name}_{k},{r}"
    return Ideal(gens, m.table, label)


# ---------------------------------------------------------------------------
# primes


@dataclass
class CatalogEntry:
    family: str
    params: dict
    claimed_height: int
    role: str
    ideal: Ideal

    @property
    def label(self) -> str:
        parts = []
        for k, v in self.params.items():
            if k == "L":
                v = "".join(map(str, sorted(v))) or "0"
            parts.append(f"{k}={v}")
        return f"{self.family}[{','.join(parts)}]" if parts else self.family

    def generator_strings(self) -> list[str]:
        return [str(g) for g in self.ideal.generators]

    def to_json(self) -> dict:
        params = {k: (sorted(v) if k == "L" else v) for k, v in self.params.items()}
        return {"family": self.family, "parameters": params, "claimed_height": self.claimed_height,
                "role": self.role, "generators": self.generator_strings()}


def roots(params: MMParams, order: int) -> list[int]:
    return enumerate_roots_of_unity(params.field, order)


def minimal_prime_generators(m: MM, family: str, **kw) -> tuple[list[Polynomial], int]:
    c, b, s, f, n, d = m.c, m.b, m.s, m.f, m.n, m.d
    if family == "P0":
        return m.C(0), 4
    if family == "P1":
        a, be = kw["alpha"], kw["beta"]
        return m.p_(1) + [b(0, 1) - a * b(0, 2), b(0, 2) - be * b(0, 3)], 11
    if family == "Pr":
        r, a, be = kw["r"], kw["alpha"], kw["beta"]
        gens = m.p_(r) + [b(0, 1) - a * b(0, 2), b(0, 2) - be * b(0, 3)]
        gens += [be - b(1, i) for i in range(1, 5)]
        return gens, 7 * r + 4 if r < n else 7 * n
    if family == "Pm1":
        return [s, f], 2
    if family == "Pm2":
        return [s, c(0, 1), c(0, 2), c(0, 4), b(0, 3), b(0, 4)], 6
    if family == "Pm3":
        return [s, c(0, 1), c(0, 4), b(0, 2), b(0, 3), c(0, 2) * b(0, 1) - c(0, 3) * b(0, 4)], 6
    if family == "Pm4":
        L = kw["L"]
        gens = [s, c(0, 1), c(0, 3), c(0, 4), b(0, 1), b(0, 2)]
        gens += [c(1, i) for i in range(1, 5) if i not in L] + [b(1, j) for j in sorted(L)]
        return gens, 10
    raise ParameterError(f"unknown minimal-prime family {family!r}")


def minimal_primes(params: MMParams) -> list[CatalogEntry]:
    """All minimal primes of J(n, d): n d^2 + 20 of them."""
    m = MM(params)
    mu = roots(params, params.d)
    out = []

    def add(family, **kw):
        gens, h = minimal_prime_generators(m, family, **kw)
        out.append(CatalogEntry(family, kw, h, "minimal-prime", m.I(gens, family)))

    add("P0")
    for a in mu:
        for be in mu:
            add("P1", alpha=a, beta=be)
    for r in range(2, params.n + 1):
        for a in mu:
            for be in mu:
                add("Pr", r=r, alpha=a, beta=be)
    add("Pm1")
    add("Pm2")
    add("Pm3")
    for L in SUBSETS:
        add("Pm4", L=L)
    return out


def _eqs(m: MM, L, level: int, how: str, value=None) -> list[Polynomial]:
    """Relations on b_{level, i} for i in L: all equal, all equal to ``value``, or all 1."""
    L = sorted(L)
    bb = [m.b(level, i) for i in L]
    if how == "equal":
        return [bb[k] - bb[k + 1] for k in range(len(bb) - 1)]
    if how == "value":
        return [x - value for x in bb]
    if how == "one":
        return [1 - x for x in bb]
    if how == "zero":
        return bb
    raise AssertionError(how)


def _cfree(m: MM, L, level: int) -> list[Polynomial]:
    return [m.c(level, i) for i in range(1, 5) if i not in L]


def _Ds(m: MM, lo: int, hi: int) -> list[Polynomial]:
    out = []
    for k in range(lo, hi + 1):
        out += m.D(k)
    return out


def embedded_generators(m: MM, family: str, **kw) -> tuple[list[Polynomial], int]:
    """Generators and claimed height of one embedded-prime candidate."""
    c, b, s, f, n, d = m.c, m.b, m.s, m.f, m.n, m.d
    r = kw.get("r", 0)
    L = kw.get("L", frozenset())
    a, be, ga = kw.get("alpha"), kw.get("beta"), kw.get("gamma")
    if family == "Q1":
        gens = [s, c(0, 1), c(0, 4), b(0, 2), b(0, 3), c(0, 2) * b(0, 1) - c(0, 3) * b(0, 4)]
        gens += _cfree(m, L, 1) + _eqs(m, L, 1, "equal")
        return gens, 10 if not L else 9
    if family == "Q2":
        gens = [s, c(0, 1), c(0, 3) - c(0, 2), c(0, 4)] + [b(0, i) for i in range(1, 5)]
        return gens + _cfree(m, L, 1) + _eqs(m, L, 1, "value", a), 12
    if family == "Q3":
        gens = m.C(0) + [s] + [b(0, i) for i in range(1, 5)]
        return gens + _cfree(m, L, 1) + _eqs(m, L, 1, "equal"), 12
    if family == "Q4":
        base = [s, c(0, 1), c(0, 4), c(0, 2) - c(0, 3)] + [b(0, i) for i in range(1, 5)]
        if n == 2 and r == 2:
            # at n = 2 the level-2 family has two parameters (gamma = beta)
            ga = be
        gens = base + [b(1, 1) - a, b(1, 4) - a, b(1, 2) - be, b(1, 3) - ga] + m.C(1)
        if r > 2:
            gens += [b(1, 2) - b(2, i) * b(1, 3) for i in range(1, 5)] + _eqs(m, range(1, 5), 2, "equal")
        gens += _Ds(m, 2, r - 1) + m.C(r) + m.Bk(3, r - 1)
        return gens, 7 * r + 2 + 4 * (r < n)
    T = m.T(r) if family != "Q24" else m.T(n - 1)
    if family == "Q5":
        gens = T + [b(r, 1), b(r, 4)] + _cfree(m, L, r + 1)
        gens += [b(r, 2) - b(r + 1, i) * b(r, 3) for i in sorted(L)] + _eqs(m, L, r + 1, "equal")
        return gens, 8 * r + 12
    if family == "Q6":
        e = d ** (2 ** r)
        return T + m.C(r + 1) + [b(r, 1) * b(r, 3) ** e - b(r, 4) * b(r, 2) ** e], 8 * r + 11
    if family == "Q7":
        return T + [c(r + 1, 1), c(r + 1, 2), c(r + 1, 4), b(r, 1), b(r, 2),
                    b(r + 1, 3), b(r + 1, 4)], 8 * r + 13
    mid = [c(r + 1, 1), c(r + 1, 4), b(r, 1), b(r, 2), b(r + 1, 2), b(r + 1, 3),
           c(r + 1, 2) * b(r + 1, 1) - c(r + 1, 3) * b(r + 1, 4)]
    if family == "Q8":
        return T + mid + _cfree(m, L, r + 2) + _eqs(m, L, r + 2, "one"), 8 * r + 17
    if family == "Q9":
        return T + mid, 8 * r + 13
    if family == "Q10":
        gens = T + [c(r + 1, 1), c(r + 1, 3), c(r + 1, 4), b(r, 1), b(r, 2), b(r + 1, 1), b(r + 1, 2)]
        return gens + _cfree(m, L, r + 2) + _eqs(m, L, r + 2, "zero"), 8 * r + 17
    if family == "Q11":
        gens = T + [c(r + 1, 1), c(r + 1, 3), c(r + 1, 4), b(r, 1), b(r, 2),
                    b(r + 1, 1), b(r + 1, 2), b(r + 1, 3)]
        return gens + _cfree(m, L, r + 2) + _eqs(m, L, r + 2, "equal"), 8 * r + 17
    head = T + m.C(r + 1) + [b(r, 1), b(r, 2), b(r, 3), b(r + 1, 2), b(r + 1, 3)]
    if family == "Q12":
        return head + _cfree(m, L, r + 2) + _eqs(m, L, r + 2, "value", a), 8 * r + 19
    if family == "Q13":
        return head + _cfree(m, L, r + 2) + _eqs(m, L, r + 2, "equal"), 8 * r + 18
    if family == "Q14":
        gens = T + m.C(r + 1) + [b(r, i) for i in range(1, 5)] + [b(r + 1, 2), b(r + 1, 3)]
        return gens + _cfree(m, L, r + 2) + _eqs(m, L, r + 2, "equal"), 8 * r + 19 + (not L)
    if family == "Q15":
        gens = T + [c(r + 1, 1), c(r + 1, 3) - c(r + 1, 2), c(r + 1, 4), b(r, 1), b(r, 2)]
        gens += [b(r + 1, i) for i in range(1, 5)]
        return gens + _cfree(m, L, r + 2) + _eqs(m, L, r + 2, "one"), 8 * r + 19
    low = T + m.C(r + 1) + [b(r, 1), b(r, 2)] + [b(r + 1, i) for i in range(1, 5)]
    if family == "Q16":
        return low + _cfree(m, L, r + 2) + _eqs(m, L, r + 2, "one"), 8 * r + 20
    if family == "Q17":
        return low + _cfree(m, L, r + 2) + _eqs(m, L, r + 2, "equal"), 8 * r + 19 + (not L)
    if family == "Q18":
        return low + [b(r, 3)] + _cfree(m, L, r + 2) + _eqs(m, L, r + 2, "equal"), 8 * r + 20 + (not L)
    if family in ("Q19", "Q20"):
        return low + [b(r, 3)] + _cfree(m, L, r + 2) + _eqs(m, L, r + 2, "value", a), 8 * r + 21
    t = kw.get("t")
    tail = [b(r, 2) - b(r + 1, 2) * b(r, 3)] + [b(r + 1, 2) - b(r + 1, i) for i in (1, 3, 4)]
    tail += [b(r, 1) - b(r + 1, 2) ** d * b(r, 4)]
    if family == "Q21":
        gens = T + _Ds(m, r + 2, t - 1) + m.C(t) + m.Bk(r + 2, t - 1)
        gens += [c(r + 1, 1) - b(r + 1, 2) ** (d * d) * c(r + 1, 2), c(r + 1, 4) - c(r + 1, 1),
                 c(r + 1, 3) - c(r + 1, 2)]
        return gens + tail, 7 * t + r + 4 * (t < n)
    if family == "Q22":
        gens = T + m.C(r + 1) + _Ds(m, r + 2, t - 1) + m.C(t) + m.Bk(r + 2, t - 1)
        return gens + tail, 7 * t + r + 1 + 4 * (t < n)
    if family == "Q23":
        e = d ** (2 ** r)
        if r == n - 2:
            gens = T + m.C(r + 1) + m.C(r + 2)
            gens += [b(r, 1) - b(r + 1, 2) ** e * b(r, 4), b(r, 2), b(r, 3), b(r + 1, 1) - b(r + 1, 4),
                     b(r + 1, 2) - a * b(r + 1, 3), b(r + 1, 1) - be * b(r + 1, 3)]
            return gens, 8 * n
        gens = T + m.C(r + 1) + _Ds(m, r + 2, t - 1) + m.C(t) + m.Bk(r + 3, t - 1)
        gens += [b(r, 1) - b(r + 1, 2) ** d * b(r, 4), b(r, 2), b(r, 3),
                 b(r + 1, 2) - a * b(r + 1, 3), b(r + 1, 1) - be * b(r + 1, 3), b(r + 1, 1) - b(r + 1, 4)]
        if t > r + 2:
            gens += [b(r + 2, i) - a for i in range(1, 5)]
        return gens, 7 * t + r + 2 + 4 * (t < n)
    if family == "Q24":
        return T + [b(n - 1, 1) - b(n - 1, 4), b(n - 1, 2) - b(n - 1, 3)], 8 * n
    raise ParameterError(f"unknown embedded family {family!r}")


PROVED_FAMILIES = ("Q1", "Q2", "Q3", "Q4")
EMBEDDED_FAMILIES = tuple(f"Q{k}" for k in range(1, 25))


def embedded_prime(family: str, params: MMParams, validate: bool = True, **kw) -> CatalogEntry:
    """One embedded-prime candidate; ``validate`` enforces the family's side conditions."""
    m = MM(params)
    if "L" in kw:
        kw["L"] = frozenset(kw["L"])
    if validate and kw not in family_members(family, params):
        raise ParameterError(f"{family} with {kw} violates the family's side conditions")
    gens, h = embedded_generators(m, family, **kw)
    role = "embedded-prime-proved" if family in PROVED_FAMILIES else "embedded-prime-candidate"
    return CatalogEntry(family, kw, h, role, m.I(gens, family))


def family_members(family: str, params: MMParams) -> list[dict]:
    """Parameter sets of ``family`` that belong to the candidate embedded set."""
    n, d = params.n, params.d
    mu = lambda e: roots(params, e)  # noqa: E731
    out: list[dict] = []
    if family == "Q1":
        out = [{"L": L} for L in SUBSETS]
    elif family == "Q2":
        out = [{"L": L, "alpha": a} for L in NONEMPTY for a in mu(d)]
    elif family == "Q3":
        out = [{"L": L} for L in NONEMPTY]
    elif family == "Q4":
        if n == 2:
            out = [{"r": 2, "alpha": a, "beta": be} for a in mu(d) for be in mu(d)]
        else:
            out = [{"r": r, "alpha": a, "beta": be, "gamma": g}
                   for r in range(2, n + 1) for a in mu(d) for be in mu(d) for g in mu(d)
                   if len({a, be, g}) > 1]
    elif family == "Q24":
        out = [{}]
    elif family in ("Q5", "Q6", "Q7", "Q9"):
        for r in range(0, n - 1):
            if family == "Q5":
                out += [{"r": r, "L": L} for L in NONEMPTY]
            else:
                out.append({"r": r})
    elif family in ("Q21", "Q22"):
        out = [{"r": r, "t": t} for r in range(0, n - 1) for t in range(r + 2, n + 1)]
    elif family in ("Q8", "Q10", "Q14", "Q15", "Q16", "Q17", "Q18"):
        out = [{"r": r, "L": L} for r in range(0, n - 2) for L in SUBSETS]
    elif family in ("Q11", "Q13"):
        out = [{"r": r, "L": L} for r in range(0, n - 2) for L in NONEMPTY]
    elif family == "Q12":
        out = [{"r": r, "L": L, "alpha": a} for r in range(0, n - 2) for L in SUBSETS
               for a in mu(d ** (2 ** r))]
    elif family == "Q19":
        for r in range(0, n - 2):
            low = set(mu(d ** (2 ** r)))
            out += [{"r": r, "L": L, "alpha": a} for L in NONEMPTY
                    for a in mu(d ** (2 ** (r + 1))) if a not in low]
    elif family == "Q20":
        out = [{"r": r, "L": L, "alpha": a} for r in range(0, n - 2) for L in NONEMPTY
               for a in mu(d ** (2 ** r))]
    elif family == "Q23":
        for r in range(0, n - 2):
            e = d ** (2 ** r)
            out += [{"r": r, "t": t, "alpha": a, "beta": be}
                    for t in range(r + 2, n + 1) for a in mu(e) for be in mu(e)]
        out += [{"r": n - 2, "t": n, "alpha": 1, "beta": a} for a in mu(d ** (2 ** (n - 2)))]
    else:
        raise ParameterError(f"unknown embedded family {family!r}")
    return out


def closed_form_count(n: int, d: int) -> int:
    """Size of the candidate set as the closed formula in n and d."""
    total = 160 * n - 270 + 31 * d + n * (n - 1)
    total += d * d if n == 2 else (d ** 3 - d) * (n - 1)
    total += sum((31 + n - k) * d ** (2 ** k) for k in range(1, n - 2))
    total += 18 * d ** (2 ** (n - 2))
    return total


def proved_count(n: int, d: int) -> int:
    """Embedded primes shown associated directly: 31 + 15d + d^2 (n = 2) or + (n-1)(d^3 - d)."""
    return 31 + 15 * d + (d * d if n == 2 else (n - 1) * (d ** 3 - d))


def closed_form_family_counts(n: int, d: int) -> dict[str, int]:
    """The closed formula split into the per-family sums it is built from.

    The formula always keeps a d^(2^0) term for the level r = 0 of Q12 and
    a d^(2^(n-2)) term for the top level of Q19/Q20 and Q23, so at n = 2 it
    counts members of a level range r = 0..n-3 that is empty.  Q19 and Q20
    share one term and are reported together.
    """
    pw = lambda k: d ** (2 ** k)  # noqa: E731
    mid = range(1, n - 2)  # k = 1..n-3
    out = {"Q1": 16, "Q2": 15 * d, "Q3": 15, "Q24": 1,
           "Q4": d * d if n == 2 else (n - 1) * (d ** 3 - d),
           "Q5": 15 * (n - 1), "Q6": n - 1, "Q7": n - 1, "Q9": n - 1,
           "Q21": n * (n - 1) // 2, "Q22": n * (n - 1) // 2}
    for fam in ("Q8", "Q10", "Q14", "Q15", "Q16", "Q17", "Q18"):
        out[fam] = 16 * (n - 2)
    for fam in ("Q11", "Q13"):
        out[fam] = 15 * (n - 2)
    out["Q12"] = 16 * (d + sum(pw(k) for k in mid))
    out["Q19+Q20"] = 15 * (sum(pw(k) for k in mid) + pw(n - 2))
    out["Q23"] = sum((n - k) * pw(k) for k in mid) + 3 * pw(n - 2)
    return out


def _grouped(per_family: dict[str, int]) -> dict[str, int]:
    out = {k: v for k, v in per_family.items() if k not in ("Q19", "Q20")}
    out["Q19+Q20"] = per_family.get("Q19", 0) + per_family.get("Q20", 0)
    return out


@dataclass
class CandidateSet:
    params: MMParams
    entries: list[CatalogEntry]
    per_family: dict[str, int]
    closed_form: int
    proved: int

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def proved_enumerated(self) -> int:
        return sum(self.per_family.get(f, 0) for f in PROVED_FAMILIES)

    def discrepancy(self) -> dict[str, tuple[int, int]]:
        """family -> (enumerated, implied by the closed formula) where they differ."""
        implied = closed_form_family_counts(self.params.n, self.params.d)
        found = _grouped(self.per_family)
        return {fam: (found.get(fam, 0), implied[fam]) for fam in implied
                if found.get(fam, 0) != implied[fam]}


def candidate_embedded_set(params: MMParams, build: bool = True) -> CandidateSet:
    """Enumerate every candidate embedded prime (every listed family and parameter)."""
    entries = []
    per_family = {}
    for fam in EMBEDDED_FAMILIES:
        members = family_members(fam, params)
        per_family[fam] = len(members)
        if build:
            entries += [embedded_prime(fam, params, **kw) for kw in members]
        else:
            entries += [CatalogEntry(fam, kw, 0, "embedded-prime-candidate", None)  # type: ignore[arg-type]
                        for kw in members]
    return CandidateSet(params, entries, per_family, closed_form_count(params.n, params.d),
                        proved_count(params.n, params.d))


def minimal_components(params: MMParams) -> list[CatalogEntry]:
    """The minimal primary components p of J, one per row of the minimal-prime table,
    plus p_-4, the intersection of the P_-4L-primary ones."""
    m = MM(params)
    c, b, s = m.c, m.b, m.s
    d = m.d
    out = []
    for e in minimal_primes(params):
        fam, gens = e.family, list(e.ideal.generators)
        if fam == "Pm2":
            gens = [s, c(0, 1), c(0, 2), c(0, 4), b(0, 3) ** d, b(0, 4)]
        elif fam == "Pm4":
            gens = p_minus4_component(m, e.params["L"])
        out.append(CatalogEntry("p" + fam[1:], e.params, e.claimed_height, "component",
                                m.I(gens, "p" + fam[1:])))
    out.append(CatalogEntry("pm4", {}, 10, "component", m.I(p_minus4(m), "pm4")))
    return out


def p_minus4_component(m: MM, L) -> list[Polynomial]:
    c, b, s, d = m.c, m.b, m.s, m.d
    gens = [s, c(0, 1), c(0, 3), c(0, 4), b(0, 1), b(0, 2) ** d] + _cfree(m, L, 1)
    gens += [b(1, j) ** d for j in sorted(L)] + [b(0, 2) - b(1, j) * b(0, 3) for j in sorted(L)]
    return gens + _eqs(m, L, 1, "equal")


def p_minus4(m: MM) -> list[Polynomial]:
    c, b, s, d = m.c, m.b, m.s, m.d
    gens = [s, c(0, 1), c(0, 3), c(0, 4), b(0, 1), b(0, 2) ** d]
    gens += [c(1, i) * (b(0, 2) - b(1, i) * b(0, 3)) for i in range(1, 5)]
    gens += [c(1, i) * b(1, i) ** d for i in range(1, 5)]
    gens += [c(1, i) * c(1, j) * (b(1, i) - b(1, j)) for i, j in itertools.combinations(range(1, 5), 2)]
    return gens


# ---------------------------------------------------------------------------
# structural primality


def _strippable(g: Polynomial) -> int | None:
    """Index of a variable v with g = lambda*v - h, lambda constant and v absent from h."""
    best = None
    for mono, _ in g.terms.items():
        if sum(mono) != 1:
            continue
        v = mono.index(1)
        if sum(1 for m2 in g.terms if m2[v]) == 1:
            rest = len(g.terms) - 1
            if best is None or rest < best[0]:
                best = (rest, v)
    return None if best is None else best[1]


def is_prime_structural(I: Ideal) -> str:
    """'prime' if I is visibly prime, else 'unknown'; never a false 'prime'.

    Generators lambda*v - h (v not in h) are used to eliminate v; what is left
    must be distinct variables plus at most one a*b - c*e in four fresh variables.
    """
    table = I.table
    gens = [g for g in I.generators if not g.is_zero()]
    while True:
        if any(g.is_constant() for g in gens):
            raise ValueError("the unit ideal is not prime")
        pick = None
        for k, g in enumerate(gens):
            v = _strippable(g)
            if v is not None and (pick is None or len(g.terms) < len(gens[pick[0]].terms)):
                pick = (k, v)
        if pick is None:
            break
        k, v = pick
        g = gens.pop(k)
        lam = g.terms[tuple(1 if i == v else 0 for i in range(len(table)))]
        value = -(g - table.gen(table.names[v]) * lam) * table.field.inv(lam)
        gens = [h for h in (subs(h, {table.names[v]: value}) for h in gens) if not h.is_zero()]
    # every generator left has no linearly appearing free variable
    if not gens:
        return "prime"
    bilinear = [g for g in gens if _is_bilinear(g)]
    if len(bilinear) > 1 or len(gens) - len(bilinear) > 0:
        return "unknown"
    return "prime"


def _is_bilinear(g: Polynomial) -> bool:
    if len(g.terms) != 2:
        return False
    monos = list(g.terms)
    if any(sum(m) != 2 or max(m) != 1 for m in monos):
        return False
    support = [i for m in monos for i, e in enumerate(m) if e]
    return len(set(support)) == 4
