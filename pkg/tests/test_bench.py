from __future__ import annotations

from mayrmeyer import bench


def test_csv_header_and_reproducibility():
    a = bench.to_csv(bench.bench_growth([(2, 2)], ("J", "K")))
    b = bench.to_csv(bench.bench_growth([(2, 2)], ("J", "K")))
    assert a == b
    lines = a.splitlines()
    assert lines[0] == "family,n,d,p,maxdeg,basis_size,spairs,ms"
    assert lines[1].startswith("J,2,2,13,") and lines[1].endswith(",")


def test_budget_gives_skipped_row():
    rec = bench.bench_point("J", 2, 2, budget=5)
    assert rec.skipped
    assert bench.to_csv([rec]).splitlines()[1] == "J,2,2,13,,,,"


def test_timing_fills_ms():
    rec = bench.bench_point("K", 2, 2, timing=True)
    assert rec.ms is not None and rec.ms >= 0


def test_growth_summary():
    recs = [bench.BenchRecord("J", 2, 2, 13, 7, 1, 1, None), bench.BenchRecord("J", 2, 3, 13, 12, 1, 1, None)]
    assert bench.growth_summary(recs) == {"J: maxdeg(2, 3) > maxdeg(2, 2)": True}


def test_probe_membership():
    assert bench.probe_membership(2, 2)
