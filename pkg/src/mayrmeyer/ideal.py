"""Ideal arithmetic: sums, products, intersections, colons, saturation, elimination."""
from __future__ import annotations

import itertools
import threading
from typing import Iterable, Sequence

from .groebner import GroebnerBasis, buchberger
from .order import MonomialOrder
from .poly import Polynomial, RingMismatchError, VarTable

GREVLEX = MonomialOrder.grevlex()
SATURATION_CAP = 64


class UndefinedQuotientError(ValueError):
    """Colon or saturation by the zero polynomial."""


class SaturationError(RuntimeError):
    """Saturation did not stabilise within the iteration cap."""


class Ideal:
    """Generator list plus a per-order cache of reduced Groebner bases."""

    def __init__(self, gens: Iterable[Polynomial] = (), table: VarTable | None = None,
                 name: str | None = None):
        gens = list(gens)
        if table is None:
            if not gens:
                raise ValueError("the zero ideal needs an explicit table")
            table = gens[0].table
        for g in gens:
            if g.table != table:
                raise RingMismatchError("generators from different rings")
        self.table = table
        seen = set()
        out = []
        for g in gens:
            if g.terms and g not in seen:
                seen.add(g)
                out.append(g)
        self.generators = tuple(out)
        self.name = name
        self._gb: dict = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        return f"Ideal({label}{len(self.generators)} generators in {len(self.table)} vars)"

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def gb(self, order: MonomialOrder = GREVLEX, budget: int | None = None) -> GroebnerBasis:
        cached = self._gb.get(order)
        if cached is None:
            cached = buchberger(self.generators, order, self.table, budget=budget)
            with self._lock:
                self._gb.setdefault(order, cached)
        return cached

    def reduced(self) -> "Ideal":
        """Same ideal, generated by its reduced grevlex basis."""
        out = Ideal(self.gb().generators, self.table, self.name)
        out._gb[GREVLEX] = self.gb()
        return out

    def is_unit(self) -> bool:
        return self.gb().is_unit()

    def is_zero(self) -> bool:
        return not self.generators

    def _check(self, other: "Ideal") -> None:
        if other.table != self.table:
            raise RingMismatchError("ideals from different rings")

    def __add__(self, other) -> "Ideal":
        if isinstance(other, Polynomial):
            other = Ideal([other], self.table)
        if isinstance(other, (list, tuple)):
            other = Ideal(other, self.table)
        return ideal_sum(self, other)

    def __mul__(self, other) -> "Ideal":
        if isinstance(other, Polynomial):
            other = Ideal([other], self.table)
        return ideal_product(self, other)

    __rmul__ = __mul__

    def __and__(self, other: "Ideal") -> "Ideal":
        return intersect(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ideal) and equals(self, other)

    def __hash__(self) -> int:
        return hash(self.gb().generators)

    def __contains__(self, f: Polynomial) -> bool:
        return is_member(f, self)

    def contains(self, other) -> bool:
        if isinstance(other, Polynomial):
            return is_member(other, self)
        return contains(self, other)

    def map(self, fn) -> "Ideal":
        return Ideal([fn(g) for g in self.generators], self.table)


def zero_ideal(table: VarTable) -> Ideal:
    return Ideal([], table)


def unit_ideal(table: VarTable) -> Ideal:
    return Ideal([table.one()], table)


def ideal_sum(*ideals: Ideal) -> Ideal:
    table = ideals[0].table
    gens = []
    for I in ideals:
        ideals[0]._check(I)
        gens.extend(I.generators)
    return Ideal(gens, table)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    I._check(J)
    return Ideal([a * b for a in I.generators for b in J.generators], I.table)


def is_member(f: Polynomial, I: Ideal) -> bool:
    if f.table != I.table:
        raise RingMismatchError("polynomial and ideal live in different rings")
    return I.gb().contains(f)


def contains(I: Ideal, J: Ideal) -> bool:
    """True iff J is a subset of I."""
    I._check(J)
    B = I.gb()
    return all(B.contains(g) for g in J.generators)


def equals(I: Ideal, J: Ideal) -> bool:
    I._check(J)
    return I.gb().generators == J.gb().generators


def _fresh_name(table: VarTable, base: str = "t") -> str:
    name = base
    while name in table.index:
        name += "_"
    return name


def eliminate(I: Ideal, names: Iterable[str], budget: int | None = None) -> Ideal:
    """I intersected with the subring not involving ``names`` (same table)."""
    names = list(names)
    if not names:
        return I
    idx = [I.table.index[v] for v in names]
    order = MonomialOrder.block(idx)
    B = I.gb(order, budget=budget)
    keep = [g for (g, lm) in zip(B.generators, B.leading_monomials())
            if not any(lm[i] for i in idx)]
    return Ideal(keep, I.table)


def intersect(I: Ideal, J: Ideal, budget: int | None = None) -> Ideal:
    """I cap J by eliminating t from t*I + (1 - t)*J."""
    I._check(J)
    table = I.table
    if I.is_zero() or J.is_zero():
        return zero_ideal(table)
    # reduced inputs keep the elimination small; a unit side needs no elimination
    gi, gj = I.gb(budget=budget), J.gb(budget=budget)
    if gi.is_unit():
        return J
    if gj.is_unit():
        return I
    t_name = _fresh_name(table)
    ext = table.extend([t_name], front=True)
    t = ext.gen(t_name)
    gens = [t * g.embed(ext) for g in gi.generators]
    gens += [(1 - t) * g.embed(ext) for g in gj.generators]
    B = buchberger(gens, MonomialOrder.block([0]), ext, budget=budget)
    keep = [g.restrict(table) for g, lm in zip(B.generators, B.leading_monomials()) if lm[0] == 0]
    return Ideal(keep, table)


def intersect_all(ideals: Sequence[Ideal], budget: int | None = None) -> Ideal:
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J, budget=budget)
    return out


def colon(I: Ideal, f: Polynomial, budget: int | None = None) -> Ideal:
    """I : f, from the generators of I cap (f) divided by f."""
    if f.is_zero():
        raise UndefinedQuotientError("colon by the zero polynomial")
    if f.table != I.table:
        raise RingMismatchError("polynomial and ideal live in different rings")
    if f.is_constant():
        return I
    inter = intersect(I, Ideal([f], I.table), budget=budget)
    return Ideal([g.exact_div(f) for g in inter.generators], I.table)


def colon_ideal(I: Ideal, H: Ideal, budget: int | None = None) -> Ideal:
    """I : H as the intersection of I : h over the generators h of H."""
    I._check(H)
    if H.is_zero():
        return unit_ideal(I.table)
    out = None
    for h in H.generators:
        q = colon(I, h, budget=budget).reduced()
        out = q if out is None else intersect(out, q, budget=budget).reduced()
    return out


def saturate(I: Ideal, f: Polynomial, budget: int | None = None) -> tuple[Ideal, int]:
    """(I : f^infinity, k) with k the least exponent where the colon chain stabilises."""
    if f.is_zero():
        raise UndefinedQuotientError("saturation by the zero polynomial")
    current = I.reduced()
    for k in range(SATURATION_CAP + 1):
        nxt = colon(current, f, budget=budget).reduced()
        if equals(nxt, current):
            return current, k
        current = nxt
    raise SaturationError(f"colon chain did not stabilise within {SATURATION_CAP} steps")


def radical_member(f: Polynomial, I: Ideal, budget: int | None = None) -> bool:
    """Rabinowitsch test: 1 in I + (t*f - 1)."""
    if f.table != I.table:
        raise RingMismatchError("polynomial and ideal live in different rings")
    if f.is_zero():
        return True
    t_name = _fresh_name(I.table)
    ext = I.table.extend([t_name])
    t = ext.gen(t_name)
    gens = [g.embed(ext) for g in I.generators] + [t * f.embed(ext) - 1]
    return buchberger(gens, GREVLEX, ext, budget=budget).is_unit()


def _min_hitting_set(sets: list[int], nvars: int) -> int:
    """Size of a smallest variable set meeting every support bitmask."""
    # keep only inclusion-minimal supports
    sets = sorted(set(sets), key=lambda s: bin(s).count("1"))
    minimal: list[int] = []
    for s in sets:
        if not any(m & s == m for m in minimal):
            minimal.append(s)
    best = [bin((1 << nvars) - 1).count("1")]

    def search(remaining: list[int], size: int) -> None:
        if size >= best[0]:
            return
        if not remaining:
            best[0] = size
            return
        # lower bound: greedy disjoint packing
        bound, used = 0, 0
        for s in remaining:
            if not s & used:
                used |= s
                bound += 1
        if size + bound >= best[0]:
            return
        pivot = min(remaining, key=lambda s: bin(s).count("1"))
        bits = [i for i in range(nvars) if pivot >> i & 1]
        for i in bits:
            m = 1 << i
            search([s for s in remaining if not s & m], size + 1)

    search(minimal, 0)
    return best[0]


def dimension(I: Ideal) -> int:
    """Krull dimension of R/I via a maximal independent set of variables (-1 for the unit ideal)."""
    B = I.gb()
    if B.is_unit():
        return -1
    supports = [sum(1 << i for i, e in enumerate(lm) if e) for lm in B.leading_monomials()]
    return len(I.table) - _min_hitting_set(supports, len(I.table))


def height(P: Ideal) -> int:
    d = dimension(P)
    if d < 0:
        raise ValueError("height of the unit ideal is undefined")
    return len(P.table) - d


def _monomials_upto(nvars: int, degree: int):
    for total in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), total):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            yield tuple(e)


def bounded_degree_representation(f: Polynomial, I: Ideal | Sequence[Polynomial], D: int,
                                  max_columns: int = 400_000) -> list[Polynomial] | None:
    """Coefficients a_i with deg a_i <= D and f = sum a_i g_i, or None.

    Builds the Macaulay system column by column: a column (i, m) is the
    polynomial m*g_i; only columns reachable from the support of ``f`` through
    shared monomials are generated, which is exact for the restricted system
    because unreachable columns cannot contribute to rows of f.
    """
    gens = list(I.generators if isinstance(I, Ideal) else I)
    if D < 0:
        raise ValueError("degree bound must be non-negative")
    table = f.table
    p = table.p
    if f.is_zero():
        return [table.zero() for _ in gens]
    gens_terms = [list(g.terms.items()) for g in gens]
    columns: dict[tuple[int, tuple], dict] = {}
    seen_rows = set(f.terms)
    frontier = list(f.terms)
    while frontier:
        nxt = []
        for u in frontier:
            for gi, terms in enumerate(gens_terms):
                for tm, _ in terms:
                    if all(a >= b for a, b in zip(u, tm)):
                        m = tuple(a - b for a, b in zip(u, tm))
                        if sum(m) > D or (gi, m) in columns:
                            continue
                        col = {}
                        for tm2, c2 in terms:
                            row = tuple(a + b for a, b in zip(m, tm2))
                            col[row] = c2
                            if row not in seen_rows:
                                seen_rows.add(row)
                                nxt.append(row)
                        columns[(gi, m)] = col
                        if len(columns) > max_columns:
                            raise MemoryError("Macaulay system exceeds the column cap")
        frontier = nxt
    coeffs = _solve_sparse(columns, dict(f.terms), p)
    if coeffs is None:
        return None
    out = [dict() for _ in gens]
    for (gi, m), c in coeffs.items():
        if c:
            out[gi][m] = c
    return [Polynomial(table, a) for a in out]


def _solve_sparse(columns: dict, rhs: dict, p: int) -> dict | None:
    """Solve sum_j x_j * col_j = rhs over F_p; columns map row -> coeff."""
    # eliminate column by column against pivots keyed by their leading row
    pivots: dict = {}        # pivot row -> (vector, combination)
    keys = sorted(columns)
    row_rank: dict = {}

    def lead(vec):
        return max(vec)

    for key in keys:
        vec = dict(columns[key])
        combo = {key: 1}
        while vec:
            r = lead(vec)
            if r not in pivots:
                break
            pv, pc = pivots[r]
            c = vec[r]
            for rr, v in pv.items():
                nv = (vec.get(rr, 0) - c * v) % p
                if nv:
                    vec[rr] = nv
                else:
                    vec.pop(rr, None)
            for kk, v in pc.items():
                nv = (combo.get(kk, 0) - c * v) % p
                if nv:
                    combo[kk] = nv
                else:
                    combo.pop(kk, None)
        if not vec:
            continue
        r = lead(vec)
        inv = pow(vec[r], -1, p)
        pivots[r] = ({k: v * inv % p for k, v in vec.items()},
                     {k: v * inv % p for k, v in combo.items()})
    # reduce the right-hand side
    vec = dict(rhs)
    sol: dict = {}
    while vec:
        r = lead(vec)
        if r not in pivots:
            return None
        pv, pc = pivots[r]
        c = vec[r]
        for rr, v in pv.items():
            nv = (vec.get(rr, 0) - c * v) % p
            if nv:
                vec[rr] = nv
            else:
                vec.pop(rr, None)
        for kk, v in pc.items():
            sol[kk] = (sol.get(kk, 0) + c * v) % p
    return sol
