from __future__ import annotations

import itertools

import pytest

from mayrmeyer.catalog import (MM, NONEMPTY, SUBSETS, MMParams, ParameterError, aux_ideal, build_ring,
                               candidate_embedded_set, closed_form_count, embedded_generators, embedded_prime,
                               is_prime_structural, k_family_generators, k_family_ideal, mayr_meyer_generators,
                               mayr_meyer_ideal, minimal_components, minimal_primes, proved_count)
from mayrmeyer.ideal import Ideal, contains, height, radical_member

P22 = MMParams.make(2, 2, 13)


def test_ring_sizes():
    assert len(build_ring(P22)) == 18
    assert len(build_ring(MMParams.make(3, 2, 13))) == 26
    with pytest.raises(ParameterError):
        MMParams.make(1, 2)


def test_generator_counts():
    assert len(mayr_meyer_ideal(P22).generators) == 17
    assert len(mayr_meyer_ideal(MMParams.make(3, 2, 13)).generators) == 25
    assert dict(mayr_meyer_generators(P22))["h13"] == MM(P22).f * MM(P22).c(0, 1) - MM(P22).s * MM(P22).c(0, 2)


def test_k_family():
    m = MM(P22)
    gens = dict(k_family_generators(P22))
    assert len(gens) == 20
    assert gens["g01"] == m.b(0, 1) * m.b(0, 3) ** 2 - m.b(0, 4) * m.b(0, 2) ** 2
    excluded = {"s", "f", "c01", "c02", "c03", "c04"}
    for params in (P22, MMParams.make(2, 3, 13), MMParams.make(3, 2, 13)):
        for g in k_family_ideal(params).generators:
            assert not g.variables() & excluded


def test_aux_ideals():
    m = MM(P22)
    assert aux_ideal("C", P22, r=0).generators == tuple(m.C(0))
    assert aux_ideal("B", P22, r=1).is_zero()
    c, b = m.c, m.b
    assert set(aux_ideal("D", P22, r=0).generators) == {c(0, 4) - c(0, 1), c(0, 3) - c(0, 2),
                                                        c(0, 1) - c(0, 2) * b(0, 1) ** 2}


def test_minimal_primes_table():
    entries = minimal_primes(P22)
    assert len(entries) == 28
    pm2 = next(e for e in entries if e.family == "Pm2")
    m = MM(P22)
    assert pm2.claimed_height == 6
    assert set(pm2.ideal.generators) == {m.s, m.c(0, 1), m.c(0, 2), m.c(0, 4), m.b(0, 3), m.b(0, 4)}


def test_minimal_primes_contain_j_and_components():
    J = mayr_meyer_ideal(P22)
    primes = minimal_primes(P22)
    for e in primes:
        assert contains(e.ideal, J), e.label
    for comp in minimal_components(P22):
        assert contains(comp.ideal, J), comp.label


def test_component_radicals():
    primes = {e.label: e for e in minimal_primes(P22)}
    for comp in minimal_components(P22):
        if comp.family == "pm4":
            continue
        prime = primes["P" + comp.label[1:]]
        assert contains(prime.ideal, comp.ideal)
        assert all(radical_member(g, comp.ideal) for g in prime.ideal.generators), comp.label


def test_minimal_primes_incomparable():
    primes = minimal_primes(P22)
    for a, b in itertools.permutations(primes, 2):
        assert not contains(a.ideal, b.ideal), (a.label, b.label)


def test_embedded_examples():
    m = MM(P22)
    assert embedded_generators(m, "Q1", L=frozenset())[1] == 10
    assert all(embedded_generators(m, "Q1", L=L)[1] == 9 for L in NONEMPTY)
    assert embedded_prime("Q2", P22, L={1}, alpha=1).claimed_height == 12
    assert embedded_prime("Q24", P22).claimed_height == 16
    with pytest.raises(ParameterError):
        embedded_prime("Q4", MMParams.make(3, 2, 13), r=2, alpha=1, beta=1, gamma=1)


def test_structural_primality():
    m = MM(P22)
    x, y, z = m.s, m.f, m.c(0, 1)
    assert is_prime_structural(Ideal([x - y ** 2, z])) == "prime"
    assert is_prime_structural(m.I(embedded_generators(m, "Q1", L=frozenset())[0])) == "prime"
    assert is_prime_structural(Ideal([x ** 2])) == "unknown"


def test_every_entry_structural_verdict_recorded():
    cands = candidate_embedded_set(P22)
    verdicts = {e.label: is_prime_structural(e.ideal) for e in cands.entries + minimal_primes(P22)}
    assert set(verdicts.values()) <= {"prime", "unknown"}
    assert sum(v == "prime" for v in verdicts.values()) > 0


def test_counts():
    assert closed_form_count(2, 2) == 154
    assert proved_count(2, 2) == 31 + 15 * 2 + 4
    assert len(SUBSETS) == 16 and len(NONEMPTY) == 15


@pytest.mark.parametrize("n,d", [(2, 2), (2, 3)])
def test_heights_match_claims(n, d):
    params = MMParams.make(n, d, 13)
    for e in minimal_primes(params) + candidate_embedded_set(params).entries:
        assert height(e.ideal) == e.claimed_height, e.label
