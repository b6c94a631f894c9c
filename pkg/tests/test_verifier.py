from __future__ import annotations

import pytest

from mayrmeyer import verifier
from mayrmeyer.verifier import CheckReport, Fault

from conftest import report

P22 = verifier.default_params(2, 2)


def test_default_prime():
    assert verifier.default_params(2, 2).p == 13
    assert verifier.default_params(2, 3).p == 13
    assert verifier.default_params(2, 5).p > 2 ** 15


def test_facts_small():
    rep = verifier.check_facts(seed=3, trials=10)
    assert rep.verdict == "pass" and len(rep.details) == 5


def test_facts_parameter_error():
    with pytest.raises(ValueError):
        verifier.check_facts(trials=0)


def test_facts_fault_injection():
    rep = verifier.check_facts(seed=1, trials=5, fault="intersect")
    assert rep.verdict == "fail"
    assert any("counterexample_trials" in x for x in rep.failures())


def test_q1_fault_names_subcheck_b():
    rep = verifier.check_q1(P22, fault=Fault("q1", 0))
    assert rep.verdict == "fail"
    assert any(x["name"].startswith("(b)") for x in rep.failures())


def test_section4_skipped_for_n2():
    rep = verifier.check_section4(P22, 2)
    assert rep.verdict == "skipped"


def test_not_radical_pass():
    assert report("not_radical", 2, 2).verdict == "pass"


def test_budget_exhaustion_is_skipped():
    rep = verifier.check_not_radical(P22, budget=10)
    assert rep.verdict == "skipped"
    assert rep.details[-1]["name"] == "budget"


def test_reports_byte_identical_without_timing():
    a = verifier.check_not_radical(P22).dumps(timing=False)
    b = verifier.check_not_radical(P22).dumps(timing=False)
    assert a == b


def test_report_schema():
    rep = report("not_radical", 2, 2)
    assert set(rep.to_json()) == {"check", "n", "d", "p", "verdict", "millis", "details"}


def test_unknown_check():
    with pytest.raises(verifier.UnknownCheckError):
        verifier.run_check("nope", P22)
    with pytest.raises(verifier.UnknownCheckError):
        verifier.run_all(checks=["nope"])


def test_fast_tier_marks_slow_entries_skipped():
    reps = verifier.run_all("fast", checks=["not_radical"], sizes=[(2, 2), (3, 2)])
    assert [r.verdict for r in reps] == ["pass", "skipped"]
    assert reps[1].details[0]["reason"] == "slow tier not requested"


def test_exit_status():
    ok = CheckReport("x", 2, 2, 13, "pass", 0)
    bad = CheckReport("x", 2, 2, 13, "fail", 0)
    skipped = CheckReport("x", 2, 2, 13, "skipped", 0)
    assert verifier.exit_status([ok, skipped]) == 0
    assert verifier.exit_status([ok, bad]) == 1


def test_fault_modes():
    x = P22.field
    from mayrmeyer.catalog import MM
    m = MM(P22)
    gens = [m.s, m.f]
    assert Fault("t", 1, "drop").apply(gens) == [m.s]
    assert Fault("t", 0, "shift").apply(gens) == [m.s + 1, m.f]
    with pytest.raises(ValueError):
        Fault("t", 0, "bogus").apply(gens)
