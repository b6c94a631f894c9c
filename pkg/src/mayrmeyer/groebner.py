"""Buchberger's algorithm over F_p with Gebauer-Moeller pair elimination."""
from __future__ import annotations

import contextlib
import contextvars
import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .order import MAX_EXP, Encoder, MonomialOrder, MonomialOverflowError
from .poly import Polynomial, RingMismatchError, VarTable


class BudgetExceeded(RuntimeError):
    """The S-pair budget ran out before the basis was complete."""


_DEFAULT_BUDGET: contextvars.ContextVar[int | None] = contextvars.ContextVar("spair_budget", default=None)


@contextlib.contextmanager
def spair_budget(limit: int | None):
    """Default S-pair budget for every basis computed inside the block."""
    token = _DEFAULT_BUDGET.set(limit)
    try:
        yield
    finally:
        _DEFAULT_BUDGET.reset(token)


@dataclass
class GBStats:
    spairs: int = 0
    zero_reductions: int = 0
    max_degree: int = 0


class _Elem:
    __slots__ = ("lm", "tail", "exps", "support", "sugar", "guarded")

    def __init__(self, lm, tail, exps, sugar, enc):
        self.lm = lm
        self.tail = tail
        self.exps = exps
        self.support = sum(1 << i for i, e in enumerate(exps) if e)
        self.sugar = sugar
        self.guarded = (lm & enc.var_mask) | enc.guard


class _Engine:
    """Reduction machinery on packed-int polynomials (dict monomial -> coeff)."""

    def __init__(self, order: MonomialOrder, table: VarTable):
        self.enc = Encoder(order, len(table))
        self.p = table.p
        self.table = table

    # conversion
    def encode(self, f: Polynomial) -> dict:
        e = self.enc.encode
        return {e(m): c for m, c in f.terms.items()}

    def decode(self, lm: int, lc: int, tail) -> Polynomial:
        d = self.enc.decode
        terms = {d(lm): lc}
        for m, c in tail:
            terms[d(m)] = c
        return Polynomial(self.table, terms, _clean=True)

    def make_elem(self, f: dict, sugar: int) -> _Elem:
        """Monic element from a nonzero dict."""
        lm = max(f)
        p = self.p
        inv = pow(f[lm], -1, p)
        tail = sorted(((m, c * inv % p) for m, c in f.items() if m != lm), reverse=True)
        return _Elem(lm, tail, self.enc.decode(lm), sugar, self.enc)

    def find_reducer(self, m: int, basis: Sequence[_Elem]):
        g = self.enc.guard
        um = m & self.enc.var_mask
        for el in basis:
            if (el.guarded - um) & g == g:
                return el
        return None

    def reduce(self, f: dict, basis: Sequence[_Elem], full: bool = True) -> dict:
        """Normal form of ``f`` (consumed) modulo ``basis``."""
        if not f or not basis:
            return f
        p = self.p
        one = self.enc.one
        heap = [-m for m in f]
        heapq.heapify(heap)
        out: dict = {}
        find = self.find_reducer
        while heap:
            m = -heapq.heappop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            el = find(m, basis)
            if el is None:
                out[m] = c
                if not full:
                    # remaining terms are untouched
                    for k, v in f.items():
                        out[k] = v
                    return out
                continue
            shift = m - el.lm
            for mg, cg in el.tail:
                k = mg + shift
                old = f.get(k)
                if old is None:
                    f[k] = -c * cg % p
                    heapq.heappush(heap, -k)
                else:
                    v = (old - c * cg) % p
                    if v:
                        f[k] = v
                    else:
                        del f[k]
        return out

    def spoly(self, a: _Elem, b: _Elem, lcm: int) -> dict:
        p = self.p
        sa = lcm - a.lm
        sb = lcm - b.lm
        f = {m + sa: c for m, c in a.tail}
        for m, c in b.tail:
            k = m + sb
            v = (f.get(k, 0) - c) % p
            if v:
                f[k] = v
            else:
                f.pop(k, None)
        return f

    def lcm(self, a: _Elem, b: _Elem) -> tuple[int, int]:
        e = tuple(x if x > y else y for x, y in zip(a.exps, b.exps))
        if max(e, default=0) > MAX_EXP:
            raise MonomialOverflowError("lcm exponent overflow")
        return self.enc.encode(e), sum(e)


def _degree(exps) -> int:
    return sum(exps)


def _buchberger_encoded(engine: _Engine, polys: Iterable[dict], sugars: Iterable[int],
                        stats: GBStats, budget: int | None) -> list[_Elem]:
    enc = engine.enc
    elems: list[_Elem] = []          # every element ever added (pairs index into this)
    active: list[int] = []           # indices currently in G
    pairs: list[tuple] = []          # (sugar, lcm, i, j)

    def update(h_idx: int) -> None:
        nonlocal active, pairs
        h = elems[h_idx]
        cand = []
        for g_idx in active:
            g = elems[g_idx]
            lcm, deg = engine.lcm(g, h)
            coprime = not (g.support & h.support)
            sugar = max(g.sugar + deg - _degree(g.exps), h.sugar + deg - _degree(h.exps))
            cand.append((g_idx, lcm, coprime, sugar))
        # chain criterion among new pairs (Gebauer-Moeller)
        kept = []
        for k, (g_idx, lcm, coprime, sugar) in enumerate(cand):
            if coprime:
                kept.append(cand[k])
                continue
            redundant = False
            for k2, (g2, lcm2, cop2, _) in enumerate(cand):
                if k2 == k:
                    continue
                if lcm2 == lcm:
                    # equal lcms: keep only one, preferring a coprime one
                    if cop2 or k2 < k:
                        redundant = True
                        break
                elif enc.divides(lcm2, lcm):
                    redundant = True
                    break
            if not redundant:
                kept.append(cand[k])
        new_pairs = [(sugar, lcm, g_idx, h_idx) for g_idx, lcm, coprime, sugar in kept
                     if not coprime]
        hl = h.lm
        old = []
        for pr in pairs:
            _, lcm, i, j = pr
            if enc.divides(hl, lcm):
                lih, _ = engine.lcm(elems[i], h)
                ljh, _ = engine.lcm(elems[j], h)
                if lih != lcm and ljh != lcm:
                    continue
            old.append(pr)
        pairs = old + new_pairs
        active = [g for g in active if not enc.divides(hl, elems[g].lm)] + [h_idx]

    for f, sugar in zip(polys, sugars):
        cur = [elems[i] for i in active]
        r = engine.reduce(dict(f), cur)
        if not r:
            continue
        el = engine.make_elem(r, sugar)
        elems.append(el)
        if el.lm == enc.one:
            return [el]
        update(len(elems) - 1)

    while pairs:
        k = min(range(len(pairs)), key=lambda t: (pairs[t][0], pairs[t][1]))
        sugar, lcm, i, j = pairs.pop(k)
        stats.spairs += 1
        if budget is not None and stats.spairs > budget:
            raise BudgetExceeded(f"S-pair budget {budget} exhausted")
        s = engine.spoly(elems[i], elems[j], lcm)
        cur = [elems[t] for t in active]
        r = engine.reduce(s, cur)
        if not r:
            stats.zero_reductions += 1
            continue
        el = engine.make_elem(r, sugar)
        elems.append(el)
        if el.lm == enc.one:
            return [el]
        update(len(elems) - 1)

    basis = [elems[i] for i in active]
    # minimal basis, then tail-reduce each element by the others
    basis.sort(key=lambda e: e.lm)
    minimal = []
    for el in basis:
        if not any(enc.divides(o.lm, el.lm) for o in minimal):
            minimal.append(el)
    reduced = []
    for k, el in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = engine.reduce(dict(el.tail), others)
        reduced.append(_Elem(el.lm, sorted(tail.items(), reverse=True), el.exps, el.sugar, enc))
    reduced.sort(key=lambda e: e.lm, reverse=True)
    return reduced


class GroebnerBasis:
    """A reduced Groebner basis: monic, sorted by decreasing leading monomial."""

    def __init__(self, table: VarTable, order: MonomialOrder, elems: list[_Elem],
                 engine: _Engine, stats: GBStats | None = None):
        self.table = table
        self.order = order
        self.reduced = True
        self._elems = elems
        self._engine = engine
        self.stats = stats or GBStats()
        self.generators = tuple(engine.decode(e.lm, 1, e.tail) for e in elems)
        self.stats.max_degree = max((g.degree() for g in self.generators), default=0)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroebnerBasis) and self.table == other.table
                and self.order == other.order and self.generators == other.generators)

    def __hash__(self) -> int:
        return hash(self.generators)

    def is_unit(self) -> bool:
        return len(self._elems) == 1 and self._elems[0].lm == self._engine.enc.one

    def is_zero(self) -> bool:
        return not self._elems

    def leading_monomials(self) -> list[tuple]:
        return [e.exps for e in self._elems]

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.table != self.table:
            raise RingMismatchError("polynomial and basis live in different rings")
        eng = self._engine
        r = eng.reduce(eng.encode(f), self._elems)
        d = eng.enc.decode
        return Polynomial(self.table, {d(m): c for m, c in r.items()}, _clean=True)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def to_strings(self) -> list[str]:
        return [g.to_str(self.order) for g in self.generators]


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder | None = None,
               table: VarTable | None = None, budget: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    order = order or MonomialOrder.grevlex()
    gens = [g for g in gens]
    if table is None:
        if not gens:
            raise ValueError("a table is required for an empty generator list")
        table = gens[0].table
    for g in gens:
        if g.table != table:
            raise RingMismatchError("generators from different rings")
    engine = _Engine(order, table)
    stats = GBStats()
    encoded = [engine.encode(g) for g in gens if not g.is_zero()]
    # deterministic processing order independent of input permutation
    encoded.sort(key=lambda f: (max(f), sorted(f.items())))
    sugars = [max(engine.enc.degree(m) for m in f) for f in encoded]
    if budget is None:
        budget = _DEFAULT_BUDGET.get()
    elems = _buchberger_encoded(engine, encoded, sugars, stats, budget)
    return GroebnerBasis(table, order, elems, engine, stats)


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    return basis.normal_form(f)
