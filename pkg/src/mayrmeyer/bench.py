"""Degree-growth benchmark: reduced grevlex bases of J(n, d) and K(n, d) across sizes.

Rows are deterministic except the ``ms`` column, which is left empty unless
timing is requested, so the default CSV is reproducible byte for byte.
"""
from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass
from typing import Iterable, Sequence

from . import intermediate
from .catalog import MM, k_family_ideal, mayr_meyer_ideal
from .groebner import BudgetExceeded
from .verifier import default_params

CSV_HEADER = ("family", "n", "d", "p", "maxdeg", "basis_size", "spairs", "ms")
FAMILIES = {"J": mayr_meyer_ideal, "K": k_family_ideal}


@dataclass(frozen=True)
class BenchRecord:
    family: str
    n: int
    d: int
    p: int
    maxdeg: int | None
    basis_size: int | None
    spairs: int | None
    ms: int | None

    @property
    def skipped(self) -> bool:
        return self.maxdeg is None


def bench_point(family: str, n: int, d: int, p: int | None = None, budget: int | None = None,
                timing: bool = False) -> BenchRecord:
    params = default_params(n, d, p)
    I = FAMILIES[family](params)
    start = time.perf_counter()
    try:
        gb = I.gb(budget=budget)
    except BudgetExceeded:
        return BenchRecord(family, n, d, params.p, None, None, None, None)
    ms = int((time.perf_counter() - start) * 1000) if timing else None
    return BenchRecord(family, n, d, params.p, gb.stats.max_degree, len(gb), gb.stats.spairs, ms)


def _point(args: tuple) -> BenchRecord:
    return bench_point(*args)


def bench_growth(sizes: Sequence[tuple[int, int]], families: Sequence[str] = ("J",), p: int | None = None,
                 budget: int | None = None, timing: bool = False, parallel: int = 1) -> list[BenchRecord]:
    """One record per (family, n, d), in the order given."""
    for fam in families:
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {fam!r}")
    jobs = [(fam, n, d, p, budget, timing) for fam in families for n, d in sizes]
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            return list(pool.map(_point, jobs))
    return [_point(j) for j in jobs]


def probe_membership(n: int, d: int, p: int | None = None) -> bool:
    """s times the degree probe lies in J(n, d)."""
    m = MM(default_params(n, d, p))
    return m.s * intermediate.membership_probe(m) in mayr_meyer_ideal(m.params)


def growth_summary(records: Iterable[BenchRecord]) -> dict[str, bool | None]:
    """For each family: does maxdeg grow from (2,2) to every larger measured size?"""
    out: dict[str, bool | None] = {}
    records = list(records)
    for fam in sorted({r.family for r in records}):
        by = {(r.n, r.d): r for r in records if r.family == fam and not r.skipped}
        base = by.get((2, 2))
        for key, rec in sorted(by.items()):
            if key != (2, 2):
                out[f"{fam}: maxdeg{key} > maxdeg(2, 2)"] = None if base is None else rec.maxdeg > base.maxdeg
    return out


def to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(["" if v is None else v for v in astuple(r)])
    return buf.getvalue()
