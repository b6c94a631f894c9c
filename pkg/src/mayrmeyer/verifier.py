"""Named, replayable checks of the decomposition identities of J(n, d).

Each check returns a ``CheckReport`` whose details list every sub-check in a
fixed order. Identities are exact equalities of reduced Groebner bases.
Associatedness of a prime P is certified by an element w with I : w = P, or by
a saturation Y = I : u^inf with Y inside P and P inside the radical of Y, where
I is a colon ideal of J (so Ass(I) is contained in Ass(J)).
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import intermediate as Q
from .catalog import (MM, NONEMPTY, SUBSETS, MMParams, embedded_generators, k_family_ideal,
                      mayr_meyer_ideal, p_minus4, p_minus4_component, roots)
from .field import Field
from .groebner import BudgetExceeded, spair_budget
from .ideal import (Ideal, bounded_degree_representation, colon, contains, equals, intersect,
                    intersect_all, radical_member, saturate)
from .poly import Polynomial, VarTable, product

DEFAULT_BUDGET = 2_000_000
CHECK_IDS = ("facts", "q1", "section3", "section4", "section5", "membership_degree", "not_radical")
FAST_PARAMS = ((2, 2), (2, 3))
SLOW_PARAMS = ((3, 2),)


class UnknownCheckError(KeyError):
    """A check id outside CHECK_IDS."""


@dataclass
class CheckReport:
    check: str
    n: int | None
    d: int | None
    p: int | None
    verdict: str
    millis: int
    details: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def failures(self) -> list[dict]:
        return [x for x in self.details if not x["ok"] and not x.get("informational")]

    def to_json(self, timing: bool = True) -> dict:
        out = {"check": self.check, "n": self.n, "d": self.d, "p": self.p,
               "verdict": self.verdict, "millis": self.millis if timing else None,
               "details": self.details}
        return out

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True)


@dataclass(frozen=True)
class Fault:
    """A single-generator mutation applied to one named ideal.

    ``shift`` replaces generator ``index`` by itself plus one, ``drop`` removes it.
    """

    target: str
    index: int = 0
    mode: str = "shift"

    def apply(self, gens: list[Polynomial]) -> list[Polynomial]:
        if not gens:
            return gens
        k = self.index % len(gens)
        out = list(gens)
        if self.mode == "drop":
            del out[k]
        elif self.mode == "shift":
            out[k] = out[k] + 1
        else:
            raise ValueError(f"unknown fault mode {self.mode!r}")
        return out


class _Checker:
    """Collects sub-check results; builds named ideals (where faults are injected)."""

    def __init__(self, params: MMParams | None, fault: Fault | None = None):
        self.params = params
        self.fault = fault
        self.details: list[dict] = []
        if params is not None:
            self.m = MM(params)
            self._J: Ideal | None = None

    @property
    def J(self) -> Ideal:
        if self._J is None:
            self._J = self.ideal("J", list(mayr_meyer_ideal(self.params).generators))
        return self._J

    def ideal(self, label: str, gens: Sequence[Polynomial]) -> Ideal:
        gens = list(gens)
        if self.fault is not None and self.fault.target == label:
            gens = self.fault.apply(gens)
        return Ideal(gens, self.m.table, label)

    def record(self, name: str, ok: bool, informational: bool = False, **info) -> bool:
        entry = {"name": name, "ok": bool(ok)}
        if informational:
            entry["informational"] = True
        entry.update(info)
        self.details.append(entry)
        return bool(ok)

    def equal(self, name: str, A: Ideal, B: Ideal, **info) -> bool:
        if equals(A, B):
            return self.record(name, True, **info)
        return self.record(name, False, **info, **_difference(A, B))

    def contained(self, name: str, big: Ideal, small: Ideal, **info) -> bool:
        bad = [g for g in small.generators if g not in big]
        extra = {"offending": str(bad[0])} if bad else {}
        return self.record(name, not bad, **info, **extra)

    def multiplies_into(self, name: str, x: Polynomial, I: Ideal, target: Ideal) -> bool:
        bad = [g for g in I.generators if x * g not in target]
        extra = {"offending": [str(g) for g in bad[:3]], "offending_count": len(bad)} if bad else {}
        return self.record(name, not bad, **extra)

    def certify_socle(self, name: str, I: Ideal, w: Polynomial, P: Ideal) -> bool:
        """I : w == P proves P is associated to I."""
        return self.equal(name, colon(I, w), P, method="colon by a single element")

    def certify_minimal(self, name: str, I: Ideal, separators: Iterable[Polynomial], P: Ideal) -> bool:
        """Y = I : (prod u)^inf with Y in P and P in rad(Y): P is the minimal prime of Y."""
        Y = I
        for u in separators:
            Y, _ = saturate(Y, u)
        inside = contains(P, Y)
        bad = [g for g in P.generators if not radical_member(g, Y)] if inside else []
        ok = inside and not bad
        extra = {}
        if not inside:
            extra["reason"] = "saturation not contained in the prime"
        elif bad:
            extra["reason"] = "prime not in the radical"
            extra["offending"] = str(bad[0])
        return self.record(name, ok, method="saturation plus radical", **extra)


def _difference(A: Ideal, B: Ideal) -> dict:
    """Which reduced-basis element breaks A == B."""
    for g in B.gb().generators:
        if g not in A:
            return {"missing_from_left": str(g)}
    for g in A.gb().generators:
        if g not in B:
            return {"missing_from_right": str(g)}
    return {}


def _label(L) -> str:
    return "{" + ",".join(str(i) for i in sorted(L)) + "}"


def _colon_by_factors(I: Ideal, factors: Iterable[Polynomial]) -> Ideal:
    """I : (f1 f2 ...) computed one factor at a time."""
    out = I
    for g in factors:
        out = colon(out, g).reduced()
    return out


def _run(check: str, params: MMParams | None, body: Callable[[_Checker], None],
         fault: Fault | None, budget: int | None) -> CheckReport:
    ck = _Checker(params, fault)
    n = d = p = None
    if params is not None:
        n, d, p = params.n, params.d, params.p
    start = time.perf_counter()
    verdict = None
    try:
        with spair_budget(budget):
            body(ck)
    except BudgetExceeded as exc:
        verdict = "skipped"
        ck.details.append({"name": "budget", "ok": False, "informational": True,
                           "reason": str(exc), "budget": budget})
    except _Skip as exc:
        verdict = "skipped"
        ck.details.append({"name": "guard", "ok": False, "informational": True, "reason": str(exc)})
    millis = int((time.perf_counter() - start) * 1000)
    if verdict is None:
        failed = [x for x in ck.details if not x["ok"] and not x.get("informational")]
        verdict = "fail" if failed else "pass"
    return CheckReport(check, n, d, p, verdict, millis, ck.details)


class _Skip(Exception):
    pass


# ---------------------------------------------------------------------------
# the Facts on random ideals

def _random_poly(rng: random.Random, table: VarTable, vars_: Sequence[int], max_terms: int = 3,
                 max_deg: int = 3) -> Polynomial:
    p = table.p
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * len(table)
        for _ in range(rng.randint(0, max_deg)):
            e[rng.choice(vars_)] += 1
        terms[tuple(e)] = rng.randrange(1, p)
    out = Polynomial(table, terms)
    if out.is_zero() or out.is_constant():
        e = [0] * len(table)
        e[rng.choice(vars_)] = 1
        out = out + Polynomial(table, {tuple(e): 1})
    return out


def _random_ideal(rng: random.Random, table: VarTable, vars_: Sequence[int]) -> Ideal:
    return Ideal([_random_poly(rng, table, vars_) for _ in range(rng.randint(2, 4))], table)


def fact_tables(p: int = 13) -> tuple[VarTable, VarTable]:
    fld = Field(p)
    return VarTable(["x", "y", "z"], fld), VarTable(["x", "y", "z", "w"], fld)


def check_facts(seed: int = 1, trials: int = 200, fault: str | None = None, p: int = 13,
                budget: int | None = DEFAULT_BUDGET) -> CheckReport:
    """Randomised distributivity, colon and saturation identities on small ideals.

    ``fault="intersect"`` perturbs every intersection result, which must make the check fail.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")

    def inter(A: Ideal, B: Ideal) -> Ideal:
        out = intersect(A, B)
        if fault == "intersect":
            out = out + out.table.gens()[0]
        return out

    def body(ck: _Checker) -> None:
        rng = random.Random(seed)
        small, big = fact_tables(p)
        failures: dict[str, list] = {k: [] for k in ("modular", "principal", "colon_sum", "saturation", "disjoint")}
        for t in range(trials):
            table = small if rng.random() < 0.5 else big
            vs = list(range(len(table)))
            I, I1, extra = (_random_ideal(rng, table, vs) for _ in range(3))
            I2 = I + extra
            x = _random_poly(rng, table, vs, max_terms=2, max_deg=2)
            # modular law for I inside I''
            if not equals(inter(I + I1, I2), I + inter(I1, I2)):
                failures["modular"].append(t)
            # (x) cap I = x (I : x)
            if not equals(inter(Ideal([x], table), I), Ideal([x], table) * colon(I, x)):
                failures["principal"].append(t)
            # (I + x I') : x = (I : x) + I'
            if not equals(colon(I + Ideal([x * g for g in I1], table), x), colon(I, x) + I1):
                failures["colon_sum"].append(t)
            # I = (I : x^k) cap (I + (x^k)) at the stabilisation exponent k
            S, k = saturate(I, x)
            if not equals(I, inter(S, I + Ideal([x ** k], table))):
                failures["saturation"].append(t)
            # ideals in disjoint variables: intersection equals product
            half = rng.randint(1, len(table) - 1)
            A = _random_ideal(rng, table, vs[:half])
            B = _random_ideal(rng, table, vs[half:])
            if not equals(inter(A, B), A * B):
                failures["disjoint"].append(t)
        for name, bad in failures.items():
            extra = {"counterexample_trials": bad[:5]} if bad else {}
            ck.record(name, not bad, trials=trials, seed=seed, **extra)

    return _run("facts", None, body, None, budget)


# ---------------------------------------------------------------------------
# the sixteen components over P_-3

def check_q1(params: MMParams, fault: Fault | None = None, budget: int | None = DEFAULT_BUDGET) -> CheckReport:
    def body(ck: _Checker) -> None:
        m = ck.m
        p3 = ck.ideal("p-3", Q.p_minus3(m))
        q1 = ck.ideal("q1", Q.q1(m))
        comps = {L: ck.ideal(f"q1{_label(L)}", Q.q1_component(m, L)) for L in SUBSETS}
        S, k = saturate(ck.J, Q.q1_saturating_element(m))
        ck.equal("(a) J : (f c02 c03 (c02 - c03))^inf = p-3 cap q1", S, intersect(p3, q1), exponent=k)
        ck.equal("(b) q1 = intersection of the sixteen q1L", q1, intersect_all([comps[L] for L in SUBSETS]))
        for L in SUBSETS:
            Y = colon(S, Q.q1_witness(m, L))
            if L:
                ck.equal(f"(c) witness colon for L={_label(L)} is p-3 cap q1L", Y, intersect(p3, comps[L]))
            else:
                want = intersect_all([p3, comps[L]] + [comps[frozenset({i})] for i in range(1, 5)])
                ck.equal("(c) witness colon for L={} is p-3 cap q1{} cap q1{i}", Y, want)
            P = ck.ideal(f"Q1{_label(L)}", embedded_generators(m, "Q1", L=L)[0])
            ck.certify_socle(f"(e) Q1{_label(L)} associated", Y, Q.q1_socle(m, L), P)
        probe = Q.q1_empty_probe(m)
        ok = (probe in p3 and all(probe in comps[frozenset({i})] for i in range(1, 5))
              and probe not in comps[frozenset()])
        ck.record("(d) b02^(d-1) b03 prod b1i separates q1{}", ok)

    return _run("q1", params, body, fault, budget)


# ---------------------------------------------------------------------------
# the colon chain through J-hat

def _x_f3_factors(m: MM) -> list[Polynomial]:
    out = [m.f] * 3
    if m.n > 2:
        out += [m.c(2, 1), m.b(1, 3), m.b(2, 1) - m.b(2, 2)]
    return out


def _q2_separators(m: MM, L, alpha: int, mu: list[int]) -> list[Polynomial]:
    out = [m.b(1, min(L)) - a for a in mu if a != alpha]
    if len(L) == 4:
        out.append(m.c(1, 2) - m.c(1, 1))
    return out


def check_section3(params: MMParams, fault: Fault | None = None,
                   budget: int | None = DEFAULT_BUDGET) -> CheckReport:
    def body(ck: _Checker) -> None:
        m = ck.m
        n, d = m.n, m.d
        c, b = m.c, m.b
        J = ck.J
        mu = roots(m.params, d)
        Jh = ck.ideal("Jhat", Q.jhat(m))
        factors = _x_f3_factors(m)
        x = product(factors, m.table)
        ck.contained("J subset Jhat", Jh, J)
        ck.multiplies_into("x Jhat subset J", x, Jh, J)
        ck.equal("Jhat = J : x", _colon_by_factors(J, factors), Jh, x=str(x))
        if n > 2:
            # the factor b13 lies in the P_-4L with 3 in L; without it the identity holds
            xs = [g for g in factors if g != b(1, 3)]
            x2 = product(xs, m.table)
            ok = all(x2 * g in J for g in Jh) and equals(_colon_by_factors(Jh, xs), Jh)
            ck.record("Jhat = J : x without the b13 factor", ok, informational=True, x=str(x2))
        p0 = ck.ideal("p0", m.C(0))
        p2m = ck.ideal("p-2", Q.p_minus2(m))
        p3 = ck.ideal("p-3", Q.p_minus3(m))
        q1 = ck.ideal("q1", Q.q1(m))
        plus = ck.ideal("Jhat+c02", Q.jhat_plus_c02(m))
        ck.equal("Jhat + (c02) display", Jh + c(0, 2), plus)
        ck.equal("Jhat + (c02) = p0 cap p-2", plus, intersect(p0, p2m))
        A = colon(Jh, c(0, 2)).reduced()
        ck.equal("Jhat : c02 display", A, ck.ideal("Jhat:c02", Q.jhat_colon_c02(m)))
        Ab = ck.ideal("Jhat:c02+b02^d", Q.jhat_colon_c02_plus_b02d(m))
        ck.equal("(Jhat : c02) + (b02^d) display", A + b(0, 2) ** d, Ab)
        ck.equal("(Jhat : c02) + (b02^d) = p-4 cap p-3 cap q1", Ab,
                 intersect_all([ck.ideal("p-4", p_minus4(m)), p3, q1]))
        X = colon(A, b(0, 2) ** d).reduced()
        ck.equal("Jhat : c02 b02^d display", X, ck.ideal("Jhat:c02b02^d", Q.jhat_colon_c02b02d(m)))
        Jpp = ck.ideal("J''", Q.j_double_prime(m))
        ck.equal("J'' = (Jhat : c02 b02^d) + (b02^d) display", X + b(0, 2) ** d, Jpp)
        first = ck.ideal("J''first", Q.j_double_prime_first(m))
        q2 = ck.ideal("q2", Q.q2(m))
        q3 = ck.ideal("q3", Q.q3(m))
        roots_part = ck.ideal("J''roots", Q.j_double_prime_first_roots(m))
        ck.equal("J'' = first cap q2", Jpp, intersect(first, q2))
        ck.equal("first = (first with c1i(1-b1i^d)) cap q3", first, intersect(roots_part, q3))
        ck.contained("q2 inside the redundant factor", roots_part, q2)
        Jp = colon(X, b(0, 2) ** d).reduced()
        ck.equal("J' = Jhat : c02 b02^(2d) display", Jp, ck.ideal("J'", Q.j_prime(m)))
        p1 = ck.ideal("p1", m.p_(1))
        q42 = ck.ideal("q42", Q.q42(m))
        parts = [p1] + ([ck.ideal("p2", m.p_(2))] if n == 2 else []) + [q42]
        ck.equal("J' = p1 cap p2 (n = 2) cap q42", Jp, intersect_all(parts))
        # Q2 and Q3 through saturations of X = J : x c02 b02^d
        for L in NONEMPTY:
            K = saturate(X, Q.q2_witness(m, L))[0]
            for a in mu:
                P = ck.ideal(f"Q2{_label(L)}{a}", embedded_generators(m, "Q2", L=L, alpha=a)[0])
                ck.certify_minimal(f"Q2 L={_label(L)} alpha={a} associated", K, _q2_separators(m, L, a, mu), P)
        K0 = saturate(X, Q.q2_witness(m, frozenset()))[0]
        ck.equal("Q2 witness colon for L={} is p1 (redundant)", K0, p1)
        for L in NONEMPTY:
            K = saturate(X, Q.q3_witness(m, L))[0]
            P = ck.ideal(f"Q3{_label(L)}", embedded_generators(m, "Q3", L=L)[0])
            ck.certify_minimal(f"Q3 L={_label(L)} associated", K, [], P)
        if n == 2:
            _check_q42(ck, Jp, p1, parts[1], q42, mu)

    return _run("section3", params, body, fault, budget)


def _check_q42(ck: _Checker, Jp: Ideal, p1: Ideal, p2: Ideal, q42: Ideal, mu: list[int]) -> None:
    m = ck.m
    ck.equal("J' : c02 = p2 cap q42", colon(Jp, m.c(0, 2)), intersect(p2, q42))
    parts = {(a, be): ck.ideal(f"q42{a},{be}", Q.q42_part(m, a, be)) for a in mu for be in mu}
    ck.equal("q42 = intersection of its (b11, b12) parts", q42, intersect_all(list(parts.values())))
    off = [parts[k] for k in parts if k[0] != k[1]]
    ck.equal("J' = p1 cap p2 cap (parts with alpha != beta)", Jp, intersect_all([p1, p2] + off),
             informational=True)
    for (a, be), part in parts.items():
        P = ck.ideal(f"Q42{a},{be}", embedded_generators(m, "Q4", r=2, alpha=a, beta=be)[0])
        if a != be:
            ck.certify_socle(f"Q4,2 alpha={a} beta={be} associated", Jp, Q.q42_socle(m, a, be, mu), P)
        else:
            redundant = contains(part, p2)
            ck.record(f"Q4,2 alpha={a} beta={be} associated", False, method="refuted",
                      reason="its part of q42 contains p2, so the component is redundant in J'"
                      if redundant else "no certificate")


# ---------------------------------------------------------------------------
# level-r analysis (n > 2)

def _x_level_factors(m: MM, r: int) -> list[Polynomial]:
    out = [m.f] * 3 + [m.c(k, 1) for k in range(2, r)] + [m.b(1, 3)] * (2 * m.d + 1)
    out += [m.b(k, 3) for k in range(2, r)]
    if r < m.n:
        out.append(1 - m.b(r, 1))
    return out


def check_section4(params: MMParams, r: int, fault: Fault | None = None,
                   budget: int | None = DEFAULT_BUDGET) -> CheckReport:
    def body(ck: _Checker) -> None:
        m = ck.m
        n, d = m.n, m.d
        if n <= 2:
            raise _Skip("the level-r analysis needs n > 2")
        if not 2 <= r <= n:
            raise ValueError(f"r must lie in [2, {n}]")
        c, b = m.c, m.b
        J = ck.J
        K = ck.ideal("K", Q.k_level(m, r))
        factors = _x_level_factors(m, r)
        x = product(factors, m.table)
        ck.contained("J subset K", K, J, r=r)
        in_j = ck.multiplies_into("x K subset J", x, K, J)
        if r > 2:
            for i in range(1, 5):
                chain = Q.k_level_rewriting_chain(m, i)
                bad = [k for k, g in enumerate(chain) if g not in J]
                ck.record(f"rewriting chain for c02 b03^(2d) c11 c13 (1 - b2{i}) x", not bad,
                          **({"first_failing_step": bad[0]} if bad else {}))
        nzd = ck.equal("x is a non-zerodivisor on K", colon(K, x), K)
        if in_j and nzd:
            ck.record("K = J : x", True, method="J in K, x K in J, K : x = K")
        else:
            ck.equal("K = J : x", _colon_by_factors(J, factors), K, method="direct colon")
        ck.equal("K + (c02) = p0 cap p-2", K + c(0, 2),
                 intersect(ck.ideal("p0", m.C(0)), ck.ideal("p-2", Q.p_minus2(m))))
        Kf = colon(K, c(0, 2) * b(0, 3) ** (2 * d) * c(1, 3)).reduced()
        ck.equal("K : c02 b03^(2d) c13 display", Kf, ck.ideal("Kfinal", Q.k_level_final(m, r)))
        first = ck.ideal("Kfirst", Q.k_level_first_component(m, r))
        last = ck.ideal("Klast", Q.k_level_last_component(m, r))
        pr = ck.ideal("p_r", m.p_(r))
        ck.equal("first component = p_r", first, pr)
        ck.equal("K : c02 b03^(2d) c13 = first cap last", Kf, intersect(first, last))
        mu = roots(m.params, d)
        keys = [(a, be, g) for a in mu for be in mu for g in mu]
        parts = {k: ck.ideal(f"Klast{k}", Q.level_part(m, list(last.generators), *k)) for k in keys}
        ck.equal("last = intersection of its (b11, b12, b13) parts", last, intersect_all(list(parts.values())))
        for k in keys:
            if len(set(k)) == 1:
                ck.contained(f"alpha=beta=gamma={k[0]} part contains p_r (redundant)", parts[k], pr)
            else:
                P = ck.ideal(f"Q4{r}{k}", embedded_generators(m, "Q4", r=r, alpha=k[0], beta=k[1], gamma=k[2])[0])
                ck.certify_socle(f"Q4 r={r} alpha,beta,gamma={k} associated to K", Kf,
                                 Q.level_socle(m, *k, mu), P)

    return _run("section4", params, body, fault, budget)


# ---------------------------------------------------------------------------
# the reduction through J : s

def check_section5(params: MMParams, fault: Fault | None = None,
                   budget: int | None = DEFAULT_BUDGET) -> CheckReport:
    def body(ck: _Checker) -> None:
        m = ck.m
        n, d = m.n, m.d
        c, b, s, f = m.c, m.b, m.s, m.f
        J = ck.J
        names = ["p-1", "(s,c01,c04,c02,c03)", "p-2", "p-4", "q1", "p-3"]
        factors = [ck.ideal(nm, g) for nm, g in zip(names, Q.j_plus_s_factors(m))]
        ck.equal("J + (s) six-fold decomposition", J + s, intersect_all(factors))
        Js = colon(J, s).reduced()
        ck.equal("J : s = listed generators", Js, ck.ideal("J:s", Q.j_colon_s(m)))
        p0 = ck.ideal("C0", m.C(0))
        ck.equal("(J : s) + (c02) = C0", Js + c(0, 2), p0)
        Jsc = colon(Js, c(0, 2)).reduced()
        ck.equal("J : s c02 display", Jsc, ck.ideal("J:sc02", Q.j_colon_sc02(m)))
        Jsc2 = colon(Jsc, c(0, 2)).reduced()
        ck.equal("J : s c02^2 display", Jsc2, ck.ideal("J:sc02^2", Q.j_colon_sc02_sq(m)))
        A = (Jsc + c(0, 2)).reduced()
        ck.equal("(J : s c02) + (c02) display", A, ck.ideal("J:sc02+c02", Q.j_colon_sc02_plus_c02(m)))
        Af = colon(A, f).reduced()
        ck.equal("((J : s c02) + (c02)) : f display", Af,
                 ck.ideal("J:sc02+c02:f", Q.j_colon_sc02_plus_c02_colon_f(m)))
        B = Jsc + [c(0, 2), f]
        ck.equal("(J : s c02) + (c02, f) display", B, ck.ideal("J:sc02+c02,f", Q.j_colon_sc02_plus_c02_f(m)))
        kfam = ck.ideal("K(n,d)", list(k_family_ideal(m.params).generators))
        ck.equal("(J : s c02) + (c02, f) = K(n,d) + C0 + (s, f)", B, kfam + p0 + [s, f])
        l0s = Q.l0_choices(m)
        branches = [("J : s c02^2 b01^d", colon(Jsc2, b(0, 1) ** d), l0s["D0'"]),
                    ("((J : s c02) + (c02)) : f b01^d", colon(Af, b(0, 1) ** d), l0s["C0"])]
        for label, L, l0 in branches:
            ck.equal(f"{label} has the L form", L, ck.ideal(f"L[{label}]", Q.l_form(m, l0)))
            ck.equal(f"{label}: L + (c11) = L0 + p1", L + c(1, 1), ck.ideal("L0+p1", l0 + m.p_(1)))
            Lc = colon(L, c(1, 1)).reduced()
            ck.equal(f"{label}: L : c11 display", Lc, ck.ideal("L:c11", Q.l_colon_c11(m, l0)))
            Lcb = colon(Lc, b(0, 3))
            ck.equal(f"{label}: L : c11 b03 display", Lcb, ck.ideal("L:c11b03", Q.l_colon_c11b03(m, l0)))
            ck.equal(f"{label}: L : c11 b03 = cap of L0 + p_r", Lcb,
                     intersect_all([ck.ideal(f"L0+p{r}", l0 + m.p_(r)) for r in range(2, n + 1)]))
            parts = [ck.ideal("L:c11+b03 part", g) for g in Q.l_colon_c11_plus_b03_parts(m, l0)]
            ck.equal(f"{label}: (L : c11) + (b03) decomposition", Lc + b(0, 3), intersect_all(parts))

    return _run("section5", params, body, fault, budget)


def check_membership_degree(params: MMParams, fault: Fault | None = None,
                            budget: int | None = DEFAULT_BUDGET) -> CheckReport:
    def body(ck: _Checker) -> None:
        m = ck.m
        J = ck.J
        D = 2 * m.d + 1
        probe = Q.membership_probe(m)
        ck.record("(a) c02 b01^d c11...(c_{n-1,1} - c_{n-1,4}) in J : s", m.s * probe in J, probe=str(probe))
        gens = list(J.generators)
        missing = []
        for k, a in enumerate(Q.j_colon_s(m)):
            target = m.s * a
            rep = bounded_degree_representation(target, gens, D)
            if rep is None or sum((r * g for r, g in zip(rep, gens)), m.table.zero()) != target \
                    or any(r.degree() > D for r in rep if not r.is_zero()):
                missing.append(k)
        ck.record(f"(b) s a has a representation with coefficients of degree <= {D}", not missing,
                  generators=len(Q.j_colon_s(m)), **({"failing_generators": missing[:5]} if missing else {}))
        neg = bounded_degree_representation(m.s * probe, gens, 0)
        ck.record("(c) negative control: no degree-0 representation of s times the probe", neg is None)

    return _run("membership_degree", params, body, fault, budget)


def check_not_radical(params: MMParams, fault: Fault | None = None,
                      budget: int | None = DEFAULT_BUDGET) -> CheckReport:
    def body(ck: _Checker) -> None:
        g = Q.not_radical_probe(ck.m)
        J = ck.J
        ck.record("s c02 (b01 - b04) in rad J", radical_member(g, J), probe=str(g))
        ck.record("s c02 (b01 - b04) not in J", g not in J)

    return _run("not_radical", params, body, fault, budget)


# ---------------------------------------------------------------------------
# orchestration

def default_params(n: int, d: int, p: int | None = None) -> MMParams:
    """p = 13 when the needed roots of unity exist there, else the library default."""
    if p is None and 12 % (d ** (2 ** max(n - 2, 0))) == 0:
        p = 13
    return MMParams.make(n, d, p)


def run_check(check: str, params: MMParams | None = None, seed: int = 1, r: int | None = None,
              fault: Fault | None = None, budget: int | None = DEFAULT_BUDGET) -> list[CheckReport]:
    if check not in CHECK_IDS:
        raise UnknownCheckError(check)
    if check == "facts":
        return [check_facts(seed, budget=budget)]
    if check == "section4":
        levels = [r] if r is not None else list(range(2, max(params.n, 2) + 1))
        return [check_section4(params, lv, fault, budget) for lv in levels]
    fn = {"q1": check_q1, "section3": check_section3, "section5": check_section5,
          "membership_degree": check_membership_degree, "not_radical": check_not_radical}[check]
    return [fn(params, fault, budget)]


def run_all(tier: str = "fast", seed: int = 1, checks: Sequence[str] | None = None,
            p: int | None = None, budget: int | None = DEFAULT_BUDGET,
            sizes: Sequence[tuple[int, int]] | None = None) -> list[CheckReport]:
    """All checks at (2,2) and (2,3); the slow tier adds (3,2) including the level-r analysis."""
    if tier not in ("fast", "slow"):
        raise ValueError("tier must be fast or slow")
    checks = list(checks or CHECK_IDS)
    for ch in checks:
        if ch not in CHECK_IDS:
            raise UnknownCheckError(ch)
    if sizes is None:
        sizes = list(FAST_PARAMS) + list(SLOW_PARAMS)
    out: list[CheckReport] = []
    if "facts" in checks:
        out.append(check_facts(seed, budget=budget))
    for n, d in sizes:
        params = default_params(n, d, p)
        slow = (n, d) not in FAST_PARAMS
        for ch in checks:
            if ch == "facts":
                continue
            if ch == "section4" and n <= 2:
                out.append(check_section4(params, 2, budget=budget))
                continue
            if slow and tier != "slow":
                out.append(CheckReport(ch, n, d, params.p, "skipped", 0,
                                       [{"name": "tier", "ok": False, "informational": True,
                                         "reason": "slow tier not requested"}]))
                continue
            out.extend(run_check(ch, params, seed, budget=budget))
    return out


def exit_status(reports: Iterable[CheckReport]) -> int:
    return 1 if any(rep.verdict == "fail" for rep in reports) else 0
