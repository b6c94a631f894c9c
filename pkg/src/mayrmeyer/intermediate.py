"""Intermediate ideals of the decomposition of J(n, d): components, colon chains and witnesses.

Every function takes an ``MM`` helper and returns a list of generators; the
verifier turns them into ideals and compares them with computed colons.
"""
from __future__ import annotations

import itertools
from typing import Iterable

from .catalog import MM, _cfree, _eqs, j2_double_prime_generators, j2_prime_generators
from .catalog import j2_triple_prime_generators, _j2_generators
from .poly import Polynomial, product

IDX = range(1, 5)
PAIRS = list(itertools.combinations(IDX, 2))


def times(a: Polynomial, gens: Iterable[Polynomial]) -> list[Polynomial]:
    return [a * g for g in gens]


def products(A: Iterable[Polynomial], B: Iterable[Polynomial]) -> list[Polynomial]:
    B = list(B)
    return [a * b for a in A for b in B]


def _prod(m: MM, polys: Iterable[Polynomial]) -> Polynomial:
    return product(polys, m.table)


# -- shared pieces ------------------------------------------------------------

def c1_links(m: MM) -> list[Polynomial]:
    """c_1i (b02 - b_1i b03)."""
    return [m.c(1, i) * (m.b(0, 2) - m.b(1, i) * m.b(0, 3)) for i in IDX]


def c1_pair_diffs(m: MM, scale: Polynomial | None = None) -> list[Polynomial]:
    """c_1i c_1j (b_1i - b_1j), optionally multiplied by ``scale``."""
    out = [m.c(1, i) * m.c(1, j) * (m.b(1, i) - m.b(1, j)) for i, j in PAIRS]
    return times(scale, out) if scale is not None else out


def c1_roots(m: MM) -> list[Polynomial]:
    """c_1i (1 - b_1i^d)."""
    return [m.c(1, i) * (1 - m.b(1, i) ** m.d) for i in IDX]


def p_minus3(m: MM) -> list[Polynomial]:
    c, b, s = m.c, m.b, m.s
    return [s, c(0, 1), c(0, 4), b(0, 2), b(0, 3), c(0, 2) * b(0, 1) - c(0, 3) * b(0, 4)]


def p_minus2(m: MM) -> list[Polynomial]:
    c, b, s = m.c, m.b, m.s
    return [s, c(0, 1), c(0, 2), c(0, 4), b(0, 3) ** m.d, b(0, 4)]


def _delta(cond: bool, gens: list[Polynomial]) -> list[Polynomial]:
    return gens if cond else []


# -- sixteen components over P_-3 ------------------------------------------

def q1_base(m: MM) -> list[Polynomial]:
    c, b, s, d = m.c, m.b, m.s, m.d
    return [s, c(0, 1), c(0, 4), b(0, 2) ** d, b(0, 3) ** d, c(0, 2) * b(0, 1) - c(0, 3) * b(0, 4)]


def q1_component(m: MM, L) -> list[Polynomial]:
    """q_1L: the Q_1L-primary component of J."""
    L = sorted(L)
    gens = q1_base(m) + _cfree(m, L, 1)
    gens += [m.b(0, 2) - m.b(1, i) * m.b(0, 3) for i in L] + _eqs(m, L, 1, "equal")
    return gens


def q1(m: MM) -> list[Polynomial]:
    """The intersection of all sixteen q_1L."""
    return q1_base(m) + c1_links(m) + c1_pair_diffs(m)


def q1_saturating_element(m: MM) -> Polynomial:
    c = m.c
    return m.f * c(0, 2) * c(0, 3) * (c(0, 2) - c(0, 3))


def q1_witness(m: MM, L) -> Polynomial:
    """Colon element isolating q_1L from the other q_1's.

    For nonempty L it is prod_{i in L} c_1i times prod_{i in L, j not in L} (b_1i - b_1j);
    for the empty set it is prod_{i != j} (b_1i - b_1j) over ordered pairs.
    """
    b, c = m.b, m.c
    L = sorted(L)
    if not L:
        return _prod(m, (b(1, i) - b(1, j) for i in IDX for j in IDX if i != j))
    out = [c(1, i) for i in L]
    out += [b(1, i) - b(1, j) for i in L for j in IDX if j not in L]
    return _prod(m, out)


def q1_empty_probe(m: MM) -> Polynomial:
    """b02^(d-1) b03 prod b_1i: in p_-3 and every q_1{i} but not in q_1{}."""
    b, d = m.b, m.d
    return b(0, 2) ** (d - 1) * b(0, 3) * _prod(m, (b(1, i) for i in IDX))


def q1_socle(m: MM, L) -> Polynomial:
    """Element w with (p_-3 cap q_1L ...) : w = Q_1L; a direct associatedness certificate."""
    b, d = m.b, m.d
    if L:
        return b(0, 3) ** (d - 1)
    return b(0, 2) ** (d - 1) * b(0, 3) ** (d - 1) * _prod(m, (b(1, i) for i in IDX))


# -- the colon chain through J-hat -------------------------------------------

def x_f3(m: MM) -> Polynomial:
    """x = f^3, times c21 b13 (b21 - b22) when n > 2."""
    x = m.f ** 3
    if m.n > 2:
        x = x * m.c(2, 1) * m.b(1, 3) * (m.b(2, 1) - m.b(2, 2))
    return x


def _level1_tail(m: MM) -> list[Polynomial]:
    """c11 - c12, c14 - c13, c13 - c12, c11(b11 - b14), c11(b12 - b13), c11 (when n >= 3)."""
    c, b = m.c, m.b
    out = [c(1, 1) - c(1, 2), c(1, 4) - c(1, 3), c(1, 3) - c(1, 2),
           c(1, 1) * (b(1, 1) - b(1, 4)), c(1, 1) * (b(1, 2) - b(1, 3))]
    return out + _delta(m.n >= 3, [c(1, 1)])


def _e_block(m: MM) -> list[Polynomial]:
    """b02^d - b01^d, c02 - c03, b01 - b04, b03^d - b01^d."""
    c, b, d = m.c, m.b, m.d
    return [b(0, 2) ** d - b(0, 1) ** d, c(0, 2) - c(0, 3), b(0, 1) - b(0, 4), b(0, 3) ** d - b(0, 1) ** d]


def jhat(m: MM) -> list[Polynomial]:
    """J-hat, which equals J : f^3 (n = 2) or J : f^3 c21 b13 (b21 - b22) (n > 2)."""
    c, b, s, f, d = m.c, m.b, m.s, m.f, m.d
    c02b = c(0, 2) * b(0, 2) ** d
    gens = [c(0, 1) - c02b, c(0, 4) - c(0, 3) * b(0, 3) ** d, s * (c(0, 2) - c(0, 3))]
    gens += times(c02b, _e_block(m))
    gens += [c(0, 2) * b(0, 1) - c(0, 3) * b(0, 4), c(0, 2) * (s - f * b(0, 2) ** d)]
    gens += times(c(0, 2), c1_links(m))
    gens += [c02b - c(0, 3) * b(0, 3) ** d]
    gens += times(c(0, 2) * b(0, 2) ** (2 * d), _level1_tail(m))
    return gens


def jhat_plus_c02(m: MM) -> list[Polynomial]:
    c, b, s, d = m.c, m.b, m.s, m.d
    return [c(0, 1), c(0, 2), c(0, 4), c(0, 3) * b(0, 3) ** d, s * c(0, 3), c(0, 3) * b(0, 4)]


def _head(m: MM) -> list[Polynomial]:
    """c01 - c02 b02^d, c04 - c02 b02^d, s - f b02^d."""
    c, b, s, f, d = m.c, m.b, m.s, m.f, m.d
    return [c(0, 1) - c(0, 2) * b(0, 2) ** d, c(0, 4) - c(0, 2) * b(0, 2) ** d, s - f * b(0, 2) ** d]


def _b0_relations(m: MM) -> list[Polynomial]:
    """c02 b02^d - c03 b03^d, c02 b01 - c03 b04, b01 b03^d - b04 b02^d."""
    c, b, d = m.c, m.b, m.d
    return [c(0, 2) * b(0, 2) ** d - c(0, 3) * b(0, 3) ** d, c(0, 2) * b(0, 1) - c(0, 3) * b(0, 4),
            b(0, 1) * b(0, 3) ** d - b(0, 4) * b(0, 2) ** d]


def jhat_colon_c02(m: MM) -> list[Polynomial]:
    b, d = m.b, m.d
    gens = _head(m) + times(b(0, 2) ** d, _e_block(m)) + c1_links(m)
    gens += times(b(0, 2) ** (2 * d), _level1_tail(m))
    return gens + _b0_relations(m)


def jhat_colon_c02_plus_b02d(m: MM) -> list[Polynomial]:
    c, b, s, d = m.c, m.b, m.s, m.d
    return [c(0, 1), c(0, 4), s, b(0, 2) ** d] + c1_links(m) + [
        c(0, 3) * b(0, 3) ** d, c(0, 2) * b(0, 1) - c(0, 3) * b(0, 4), b(0, 1) * b(0, 3) ** d]


def _c1_block(m: MM) -> list[Polynomial]:
    """c_1i(b02 - b_1i b03), c_1i c_1j (b_1i - b_1j), c_1i b01 (1 - b_1i^d), c02 c_1i (1 - b_1i^d)."""
    c, b, d = m.c, m.b, m.d
    gens = c1_links(m) + c1_pair_diffs(m)
    gens += [c(1, i) * b(0, 1) * (1 - b(1, i) ** d) for i in IDX]
    gens += [c(0, 2) * c(1, i) * (1 - b(1, i) ** d) for i in IDX]
    return gens


def jhat_colon_c02b02d(m: MM) -> list[Polynomial]:
    """J-hat : c02 b02^d, the ideal whose associated primes give Q_2, Q_3 and Q_4,2."""
    b, d = m.b, m.d
    gens = _head(m) + [m.c(0, 2) - m.c(0, 3)] + [b(0, 2) ** d - b(0, 1) ** d, b(0, 1) - b(0, 4),
                                                  b(0, 3) ** d - b(0, 1) ** d]
    gens += times(b(0, 2) ** d, _level1_tail(m))
    return gens + _c1_block(m)


def _b0_powers(m: MM) -> list[Polynomial]:
    return [m.b(0, i) ** m.d for i in IDX]


def j_double_prime(m: MM) -> list[Polynomial]:
    """(J-hat : c02 b02^d) + (b02^d)."""
    c, b, s = m.c, m.b, m.s
    gens = [c(0, 1), c(0, 4), c(0, 2) - c(0, 3), s] + _b0_powers(m) + [b(0, 1) - b(0, 4)]
    return gens + _c1_block(m)


def j_double_prime_first(m: MM) -> list[Polynomial]:
    """First factor of J'' = (this) cap q_2."""
    b, d = m.b, m.d
    gens = m.C(0) + [m.s] + _b0_powers(m) + [b(0, 1) - b(0, 4)] + c1_links(m) + c1_pair_diffs(m)
    return gens + [m.c(1, i) * b(0, 1) * (1 - b(1, i) ** d) for i in IDX]


def j_double_prime_first_roots(m: MM) -> list[Polynomial]:
    """The factor of j_double_prime_first with c_1i (1 - b_1i^d); it contains q_2."""
    gens = m.C(0) + [m.s] + _b0_powers(m) + [m.b(0, 1) - m.b(0, 4)] + c1_links(m) + c1_pair_diffs(m)
    return gens + c1_roots(m)


def q2(m: MM) -> list[Polynomial]:
    c, b, s = m.c, m.b, m.s
    gens = [c(0, 1), c(0, 4), c(0, 2) - c(0, 3), s] + _b0_powers(m) + [b(0, 1) - b(0, 4)]
    return gens + c1_links(m) + c1_pair_diffs(m) + c1_roots(m)


def q3(m: MM) -> list[Polynomial]:
    b = m.b
    gens = m.C(0) + [m.s] + _b0_powers(m) + [b(0, 1), b(0, 4)]
    return gens + c1_links(m) + c1_pair_diffs(m)


def j_prime(m: MM) -> list[Polynomial]:
    """J' = J-hat : c02 b02^(2d)."""
    c, b, d = m.c, m.b, m.d
    gens = _head(m) + [c(0, 2) - c(0, 3), b(0, 2) ** d - b(0, 1) ** d, b(0, 1) - b(0, 4),
                       b(0, 3) ** d - b(0, 1) ** d]
    gens += _level1_tail(m)
    gens += [c(1, 1) * (b(0, 2) - b(1, i) * b(0, 3)) for i in IDX]
    gens += [c(1, 1) ** 2 * (b(1, i) - b(1, j)) for i, j in PAIRS]
    return gens + [c(1, 1) * (1 - b(1, i) ** d) for i in IDX]


def q42(m: MM) -> list[Polynomial]:
    """q_4,2: the intersection of the Q_4,2ab-primary components (unit ideal when n > 2)."""
    c, b, s, d = m.c, m.b, m.s, m.d
    gens = [c(0, 1), c(0, 4), s, c(0, 2) - c(0, 3), b(0, 1) ** d, b(0, 1) - b(0, 4), b(0, 2), b(0, 3),
            b(1, 1) - b(1, 4), b(1, 2) - b(1, 3), c(1, 1) ** 2]
    gens += [1 - b(1, i) ** d for i in IDX] + m.D(1)
    return gens + _delta(m.n >= 3, [m.one])


def q42_part(m: MM, alpha: int, beta: int) -> list[Polynomial]:
    """The part of q_4,2 where b11 = alpha and b12 = beta."""
    return q42(m) + [m.b(1, 1) - alpha, m.b(1, 2) - beta]


def q2_witness(m: MM, L) -> Polynomial:
    """c02 prod_{i in L} c_1i prod_{j not in L} (1 - b_1j^d)."""
    out = [m.c(0, 2)] + [m.c(1, i) for i in sorted(L)]
    out += [1 - m.b(1, j) ** m.d for j in IDX if j not in L]
    return _prod(m, out)


def q3_witness(m: MM, L) -> Polynomial:
    """prod_{i in L} c_1i times the b_1 differences that separate L, times prod (1 - b_1j^d)."""
    b = m.b
    out = [m.c(1, i) for i in sorted(L)]
    rest = [j for j in IDX if j not in L]
    out += [b(1, j) - b(1, k) for j, k in itertools.combinations(rest, 2)]
    out += [b(1, i) - b(1, j) for i in sorted(L) for j in rest]
    out += [1 - b(1, j) ** m.d for j in IDX]
    return _prod(m, out)


def q42_socle(m: MM, alpha: int, beta: int, mu: list[int]) -> Polynomial:
    """c11 b01^(d-1) (b12 - b11) times separators of the other (alpha', beta') parts."""
    b = m.b
    out = [m.c(1, 1), b(0, 1) ** (m.d - 1), b(1, 2) - b(1, 1)]
    out += [b(1, 1) - a for a in mu if a != alpha] + [b(1, 2) - be for be in mu if be != beta]
    return _prod(m, out)


# -- level-r analysis for n > 2 ------------------------------------------------

def x_level(m: MM, r: int) -> Polynomial:
    """f^3 (c21...c_{r-1,1}) b13^(2d+1) (b23...b_{r-1,3}) (1 - b_r1), the last factor only for r < n."""
    x = m.f ** 3 * m.cprod(2, r - 1) * m.b(1, 3) ** (2 * m.d + 1) * m.bprod(2, r - 1, 3)
    if r < m.n:
        x = x * (1 - m.b(r, 1))
    return x


def _level_tail(m: MM, r: int) -> list[Polynomial]:
    """Everything multiplied by c02 c13 b03^(2d) in K, without that factor."""
    c, b, d = m.c, m.b, m.d
    gens = m.D(1) + [b(1, 1) - b(1, 4)] + [1 - b(1, i) ** d for i in IDX]
    if r > 2:
        gens += products([c(1, 1), b(0, 2), b(0, 3)], [1 - b(2, i) for i in IDX])
        gens += [b(1, 2) - b(2, i) * b(1, 3) for i in IDX] + _eqs(m, IDX, 2, "equal")
    for k in range(2, r - 1):
        gens += m.D(k) + [1 - b(k + 1, i) for i in IDX]
    return gens + m.D(r - 1) + m.C(r)


def k_level(m: MM, r: int) -> list[Polynomial]:
    """K with J subset K, x K subset J, and K = J : x for the level-r element x."""
    c, b, s, f, d = m.c, m.b, m.s, m.f, m.d
    c02 = c(0, 2)
    gens = [c(0, 1) - c02 * b(0, 2) ** d, c(0, 1) - c(0, 4), s * (c02 - c(0, 3)),
            c02 * b(0, 1) - c(0, 3) * b(0, 4), c02 * (s - f * b(0, 2) ** d),
            c02 * b(0, 2) ** d - c(0, 3) * b(0, 3) ** d]
    gens += times(c02, products([b(0, 2) ** d, c(1, 3) * b(0, 3) ** d], _e_block(m)))
    gens += times(c02, c1_links(m))
    gens += [c02 * b(0, 2) ** (2 * d) * (c(1, i) * b(1, i) ** d - c(1, 3) * b(1, 3) ** d) for i in IDX]
    gens += times(c02 * c(1, 3) * b(0, 3) ** (2 * d), _level_tail(m, r))
    return gens


def k_level_rewriting_chain(m: MM, i: int) -> list[Polynomial]:
    """The intermediate elements showing c02 b03^(2d) c11 c13 (1 - b2i) x lies in J (r > 2)."""
    c, b, s, f, d = m.c, m.b, m.s, m.f, m.d
    u = 1 - b(2, i)
    sf = s * f
    return [
        f ** 2 * c(0, 2) * b(0, 3) ** (2 * d) * c(1, 1) * c(1, 3) * u * c(2, 1) * b(1, 3) ** (2 * d + 1),
        f ** 2 * c(0, 2) * b(0, 2) ** (2 * d) * c(1, 1) * c(1, 3) * u * c(2, 1) * b(1, 3),
        sf * c(0, 1) * c(1, 1) ** 2 * u * c(2, i) * b(1, 3),
        sf * c(0, 4) * c(1, 1) * c(1, 2) * u * c(2, i) * b(1, 3),
        sf * c(0, 4) * c(1, 1) * c(1, 2) * (b(1, 3) - b(1, 2)) * c(2, i),
        sf * c(0, 1) * c(1, 1) * (c(1, 3) * b(1, 3) - c(1, 2) * b(1, 2)) * c(2, i),
        sf * c(0, 2) * c(1, 1) * (c(1, 3) * b(1, 3) - c(1, 2) * b(1, 2)) * b(0, 3) ** d * c(2, i),
        sf * c(0, 2) * c(1, 1) * (c(1, 3) - c(1, 2)) * b(0, 2) * b(0, 3) ** (d - 1) * c(2, i),
        sf * c(0, 2) * c(1, 1) * b(1, 1) * (c(1, 3) - c(1, 2)) * b(0, 3) ** d * c(2, i),
        sf * c(0, 1) * c(1, 1) * b(1, 1) * (c(1, 3) - c(1, 2)) * c(2, i),
    ]


def _level_common(m: MM, r: int) -> list[Polynomial]:
    """Pieces shared by both components of K : c02 b03^(2d) c13."""
    b = m.b
    gens: list[Polynomial] = []
    for k in range(2, r - 1):
        gens += m.D(k) + [1 - b(k + 1, i) for i in IDX]
    return gens + m.D(r - 1) + m.C(r)


def k_level_final(m: MM, r: int) -> list[Polynomial]:
    """K : c02 b03^(2d) c13."""
    c, b, s, f, d = m.c, m.b, m.s, m.f, m.d
    gens = [c(0, 1) - c(0, 2) * b(0, 2) ** d, c(0, 1) - c(0, 4), s - f * b(0, 2) ** d,
            c(0, 2) - c(0, 3), b(0, 1) - b(0, 4), b(0, 2) - b(1, 3) * b(0, 3)]
    gens += m.D(1) + [b(1, 1) - b(1, 4)] + [1 - b(1, i) ** d for i in IDX]
    if r > 2:
        gens += products([c(1, 1), b(0, 2), b(0, 3)], [1 - b(2, i) for i in IDX])
        gens += [b(1, 2) - b(2, i) * b(1, 3) for i in IDX] + _eqs(m, IDX, 2, "equal")
    gens += _level_common(m, r)
    for i in IDX:
        if i != 3:
            gens += [(b(1, i) - b(1, 3)) * b(0, 3), (b(1, i) - b(1, 3)) * c(1, i)]
    return gens + [b(0, 3) ** d - b(0, 1) ** d]


def k_level_first_component(m: MM, r: int) -> list[Polynomial]:
    """The first component of K : c02 b03^(2d) c13, which equals p_r."""
    c, b, s, f, d = m.c, m.b, m.s, m.f, m.d
    gens = [c(0, 1) - c(0, 2) * b(0, 2) ** d, c(0, 1) - c(0, 4), s - f * b(0, 2) ** d,
            c(0, 2) - c(0, 3), b(0, 1) - b(0, 4), b(0, 2) - b(1, 3) * b(0, 3)] + m.D(1)
    gens += [1 - b(1, i) ** d for i in IDX]
    gens += _delta(r > 2, [1 - b(2, i) for i in IDX])
    gens += [b(1, 3) - b(1, i) for i in IDX if i != 3] + [b(0, 3) ** d - b(0, 1) ** d]
    return gens + _level_common(m, r)


def k_level_last_component(m: MM, r: int) -> list[Polynomial]:
    """The second component of K : c02 b03^(2d) c13: the Q_4r-primary part."""
    c, b, s, d = m.c, m.b, m.s, m.d
    gens = [s, c(0, 1), c(0, 4), c(0, 2) - c(0, 3), b(0, 1) - b(0, 4), b(0, 2), b(0, 3), b(0, 1) ** d]
    gens += m.C(1) + [b(1, 1) - b(1, 4)] + [1 - b(1, i) ** d for i in IDX]
    if r > 2:
        gens += [b(1, 2) - b(2, i) * b(1, 3) for i in IDX] + _eqs(m, IDX, 2, "equal")
    return gens + _level_common(m, r)


def level_part(m: MM, gens: list[Polynomial], alpha: int, beta: int, gamma: int) -> list[Polynomial]:
    b = m.b
    return gens + [b(1, 1) - alpha, b(1, 2) - beta, b(1, 3) - gamma]


def level_socle(m: MM, alpha: int, beta: int, gamma: int, mu: list[int]) -> Polynomial:
    """b01^(d-1) (b13 - b1i) times separators; b1i is chosen with a value different from gamma."""
    b = m.b
    i = 1 if alpha != gamma else 2
    out = [b(0, 1) ** (m.d - 1), b(1, 3) - b(1, i)]
    for k, val in ((1, alpha), (2, beta), (3, gamma)):
        out += [b(1, k) - a for a in mu if a != val]
    return _prod(m, out)


# -- the reduction through J : s ---------------------------------------------

def j_plus_s_factors(m: MM) -> list[list[Polynomial]]:
    """p_-1, (s, c01, c04, c02, c03), p_-2, p_-4, q_1, p_-3."""
    from .catalog import p_minus4
    c, s, f = m.c, m.s, m.f
    return [[s, f], [s, c(0, 1), c(0, 4), c(0, 2), c(0, 3)], p_minus2(m), p_minus4(m), q1(m), p_minus3(m)]


def _d0_prime(m: MM) -> list[Polynomial]:
    """c01 - c02 b01^d, c03 - c02, c04 - c02 b04^d."""
    c, b, d = m.c, m.b, m.d
    return [c(0, 1) - c(0, 2) * b(0, 1) ** d, c(0, 3) - c(0, 2), c(0, 4) - c(0, 2) * b(0, 4) ** d]


def _b0_diffs(m: MM) -> list[Polynomial]:
    """b01^d - b02^d, b04^d - b03^d, b01 - b04."""
    b, d = m.b, m.d
    return [b(0, 1) ** d - b(0, 2) ** d, b(0, 4) ** d - b(0, 3) ** d, b(0, 1) - b(0, 4)]


def _c1_shift(m: MM) -> list[Polynomial]:
    """c_1i (b01 - b_1i^d b04)."""
    b, d = m.b, m.d
    return [m.c(1, i) * (b(0, 1) - b(1, i) ** d * b(0, 4)) for i in IDX]


def j_colon_s(m: MM) -> list[Polynomial]:
    """The listed generators of J : s."""
    c, b, s, f, d = m.c, m.b, m.s, m.f, m.d
    c02 = c(0, 2)
    gens = _d0_prime(m) + _j2_generators(m.params) + [c02 * (f * b(0, 1) ** d - s)]
    gens += products([f * c02, c02 ** 2], _b0_diffs(m))
    gens += times(c02, [b(0, 1) * b(0, 3) ** d - b(0, 4) * b(0, 2) ** d] + c1_links(m))
    gens += times(c02, c1_pair_diffs(m) + _c1_shift(m) + times(c02, c1_roots(m)))
    return gens


def membership_probe(m: MM) -> Polynomial:
    """c02 b01^d c11 ... c_{n-2,1} (c_{n-1,1} - c_{n-1,4}), an element of J : s."""
    n = m.n
    return m.c(0, 2) * m.b(0, 1) ** m.d * m.cprod(1, n - 2) * (m.c(n - 1, 1) - m.c(n - 1, 4))


def not_radical_probe(m: MM) -> Polynomial:
    """s c02 (b01 - b04): in the radical of J but not in J."""
    return m.s * m.c(0, 2) * (m.b(0, 1) - m.b(0, 4))


def j2_prime_over_c02(m: MM) -> list[Polynomial]:
    return [g.exact_div(m.c(0, 2)) for g in j2_prime_generators(m.params) if not g.is_zero()]


def _c1_std(m: MM) -> list[Polynomial]:
    """c_1i(b02 - b_1i b03), c_1i c_1j(b_1i - b_1j), c_1i(b01 - b_1i^d b04)."""
    return c1_links(m) + c1_pair_diffs(m) + _c1_shift(m)


def j_colon_sc02(m: MM) -> list[Polynomial]:
    c, b, s, f, d = m.c, m.b, m.s, m.f, m.d
    gens = _d0_prime(m) + j2_prime_over_c02(m) + [f * b(0, 1) ** d - s]
    gens += products([f, c(0, 2)], _b0_diffs(m))
    gens += [b(0, 1) * b(0, 3) ** d - b(0, 4) * b(0, 2) ** d]
    return gens + _c1_std(m) + times(c(0, 2), c1_roots(m))


def j_colon_sc02_sq(m: MM) -> list[Polynomial]:
    b, s, f, d = m.b, m.s, m.f, m.d
    gens = _d0_prime(m) + j2_prime_over_c02(m) + [f * b(0, 1) ** d - s]
    return gens + _b0_diffs(m) + c1_links(m) + c1_pair_diffs(m) + c1_roots(m)


def j_colon_sc02_plus_c02(m: MM) -> list[Polynomial]:
    b, s, f, d = m.b, m.s, m.f, m.d
    gens = m.C(0) + j2_prime_over_c02(m) + [f * b(0, 1) ** d - s] + times(f, _b0_diffs(m))
    return gens + [b(0, 1) * b(0, 3) ** d - b(0, 4) * b(0, 2) ** d] + _c1_std(m)


def j_colon_sc02_plus_c02_colon_f(m: MM) -> list[Polynomial]:
    b, s, f, d = m.b, m.s, m.f, m.d
    gens = m.C(0) + j2_prime_over_c02(m) + [f * b(0, 1) ** d - s] + _b0_diffs(m)
    return gens + _c1_std(m)


def j_colon_sc02_plus_c02_f(m: MM) -> list[Polynomial]:
    b, s, f, d = m.b, m.s, m.f, m.d
    gens = m.C(0) + j2_prime_over_c02(m) + [s, f, b(0, 1) * b(0, 3) ** d - b(0, 4) * b(0, 2) ** d]
    return gens + _c1_std(m)


def l0_choices(m: MM) -> dict[str, list[Polynomial]]:
    return {"C0": m.C(0), "D0'": _d0_prime(m)}


def _l_tail(m: MM) -> list[Polynomial]:
    """s - f b01^d, b01^d - b02^d, b04^d - b03^d, b01 - b04."""
    b, s, f, d = m.b, m.s, m.f, m.d
    return [s - f * b(0, 1) ** d, b(0, 1) ** d - b(0, 2) ** d, b(0, 4) ** d - b(0, 3) ** d, b(0, 1) - b(0, 4)]


def l_form(m: MM, l0: list[Polynomial]) -> list[Polynomial]:
    """L_0 + J2'' + (s - f b01^d, ...) + c11 (b02 - b_1i b03, c11 (b_1i - b_1j), 1 - b_1i^d)."""
    c, b, d = m.c, m.b, m.d
    c11 = c(1, 1)
    gens = l0 + j2_double_prime_generators(m.params) + _l_tail(m)
    gens += [c11 * (b(0, 2) - b(1, i) * b(0, 3)) for i in IDX]
    gens += [c11 ** 2 * (b(1, i) - b(1, j)) for i, j in PAIRS]
    return gens + [c11 * (1 - b(1, i) ** d) for i in IDX]


def l_colon_c11(m: MM, l0: list[Polynomial]) -> list[Polynomial]:
    c, b, d = m.c, m.b, m.d
    gens = l0 + m.D(1) + j2_triple_prime_generators(m.params) + _l_tail(m)
    gens += [b(0, 2) - b(1, i) * b(0, 3) for i in IDX]
    gens += [c(1, 1) * (b(1, i) - b(1, j)) for i, j in PAIRS]
    return gens + [1 - b(1, i) ** d for i in IDX]


def l_colon_c11b03(m: MM, l0: list[Polynomial]) -> list[Polynomial]:
    b, d = m.b, m.d
    gens = l0 + m.D(1) + j2_triple_prime_generators(m.params) + _l_tail(m)
    gens += [b(0, 2) - b(1, i) * b(0, 3) for i in IDX]
    gens += [b(1, i) - b(1, j) for i, j in PAIRS]
    return gens + [1 - b(1, i) ** d for i in IDX]


def l_colon_c11_plus_b03_parts(m: MM, l0: list[Polynomial]) -> list[list[Polynomial]]:
    """The components of (L : c11) + (b03), one pair per level r = 2..n."""
    c, b, s, d, n = m.c, m.b, m.s, m.d, m.n
    base = [s, b(0, 1) ** d, b(0, 1) - b(0, 4), b(0, 2), b(0, 3)] + [1 - b(1, i) ** d for i in IDX]
    out = []
    for r in range(2, n + 1):
        first = l0 + m.C(1)
        for k in range(2, r):
            first += m.D(k)
        first += m.C(r) + m.Bk(3, r - 1) + base + [b(1, 1) - b(1, 4)]
        if r > 2:
            first += [b(1, 2) - b(2, i) * b(1, 3) for i in IDX] + [b(2, i) - b(2, 1) for i in IDX]
        if n == 2:
            first += [b(1, 2) - b(1, 3)]
        second = l0 + [g for k in range(1, r) for g in m.D(k)] + m.C(r) + m.B(r - 1) + base
        second += [b(1, i) - b(1, j) for i, j in PAIRS]
        out += [[g for g in first if not g.is_zero()], [g for g in second if not g.is_zero()]]
    return out
