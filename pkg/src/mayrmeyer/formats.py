"""Plain-text ``.ideal`` files, catalog JSON and Singular / Macaulay2 scripts.

An ``.ideal`` file looks like::

    # optional comments
    ring p=13 n=2 d=2
    vars s f c01 c02 ...
    c01 - c02*b02^2
    ...

``n`` and ``d`` are optional; one generator per line follows the ``vars`` line.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Iterable

from .catalog import MMParams, candidate_embedded_set, minimal_components, minimal_primes
from .field import Field
from .ideal import Ideal, height
from .poly import ParseError, VarTable, parse_poly


class IdealFileError(ValueError):
    pass


def dumps_ideal(I: Ideal, n: int | None = None, d: int | None = None, comment: str | None = None) -> str:
    table = I.table
    n = table.n if n is None else n
    head = f"ring p={table.p}"
    if n is not None:
        head += f" n={n}"
    if d is not None:
        head += f" d={d}"
    lines = [f"# {line}" for line in (comment or "").splitlines()]
    lines += [head, "vars " + " ".join(table.names)]
    lines += [str(g) for g in I.generators]
    return "\n".join(lines) + "\n"


def loads_ideal(text: str) -> tuple[Ideal, dict]:
    """Parse an ``.ideal`` file; returns the ideal and the ring header fields."""
    header: dict | None = None
    names = None
    gens_text: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            if not line.startswith("ring "):
                raise IdealFileError(f"line {lineno}: expected 'ring p=...'")
            header = {}
            for item in line.split()[1:]:
                key, sep, val = item.partition("=")
                if not sep or key not in ("p", "n", "d") or not val.isdigit():
                    raise IdealFileError(f"line {lineno}: bad ring field {item!r}")
                header[key] = int(val)
            if "p" not in header:
                raise IdealFileError(f"line {lineno}: the ring needs p")
        elif names is None:
            if not line.startswith("vars"):
                raise IdealFileError(f"line {lineno}: expected 'vars ...'")
            names = line.split()[1:]
        else:
            gens_text.append((lineno, line))
    if header is None or names is None:
        raise IdealFileError("missing ring or vars line")
    table = VarTable(names, Field(header["p"]), header.get("n"))
    gens = []
    for lineno, line in gens_text:
        try:
            gens.append(parse_poly(line, table))
        except ParseError as exc:
            raise IdealFileError(f"line {lineno}: {exc}") from exc
    return Ideal(gens, table), header


def write_ideal(path: str | Path, I: Ideal, **kw) -> None:
    Path(path).write_text(dumps_ideal(I, **kw))


def read_ideal(path: str | Path) -> tuple[Ideal, dict]:
    return loads_ideal(Path(path).read_text())


def to_cas_script(I: Ideal, dialect: str, name: str = "I") -> str:
    """A script that defines the ring and the ideal and prints a Groebner basis."""
    table = I.table
    gens = [str(g) for g in I.generators] or ["0"]
    if dialect == "singular":
        body = ",\n  ".join(gens)
        return (f"ring R = {table.p}, ({', '.join(table.names)}), dp;\n"
                f"ideal {name} =\n  {body};\n"
                f"ideal G = std({name});\nG;\n")
    if dialect == "macaulay2":
        body = ",\n  ".join(gens)
        return (f"R = ZZ/{table.p}[{', '.join(table.names)}, MonomialOrder => GRevLex];\n"
                f"{name} = ideal(\n  {body});\n"
                f"G = gens gb {name}\n")
    raise ValueError(f"unknown dialect {dialect!r}; use singular or macaulay2")


_SINGULAR_RING = re.compile(r"ring R = (\d+), \(([^)]*)\), dp;")
_M2_RING = re.compile(r"R = ZZ/(\d+)\[([^\]]*), MonomialOrder => GRevLex\];")


def from_cas_script(text: str, dialect: str) -> Ideal:
    """Re-import a script written by ``to_cas_script`` (syntactic round trip)."""
    pattern, opener = (_SINGULAR_RING, "ideal I =") if dialect == "singular" else (_M2_RING, "= ideal(")
    match = pattern.search(text)
    if match is None:
        raise IdealFileError("no ring definition found")
    names = [v.strip() for v in match.group(2).split(",")]
    table = VarTable(names, Field(int(match.group(1))))
    start = text.index(opener) + len(opener)
    end = text.index(";" if dialect == "singular" else ");", start)
    items = [t.strip() for t in text[start:end].replace("\n", " ").split(",")]
    gens = [parse_poly(t, table) for t in items if t and t != "0"]
    return Ideal(gens, table)


def catalog_rows(params: MMParams, role: str = "all", with_heights: bool = True) -> list[dict]:
    """Rows for the minimal primes, their components and the embedded candidates."""
    rows = []
    groups = []
    if role in ("all", "minimal"):
        groups.append(minimal_primes(params))
    if role in ("all", "component"):
        groups.append(minimal_components(params))
    if role in ("all", "embedded"):
        groups.append(candidate_embedded_set(params).entries)
    if not groups:
        raise ValueError(f"unknown role {role!r}")
    for entries in groups:
        for e in entries:
            row = e.to_json()
            row["label"] = e.label
            if with_heights and e.role != "component":
                row["height"] = height(e.ideal)
            rows.append(row)
    return rows


def catalog_json(params: MMParams, role: str = "all", with_heights: bool = True) -> str:
    doc = {"n": params.n, "d": params.d, "p": params.p,
           "entries": catalog_rows(params, role, with_heights)}
    return json.dumps(doc, indent=1, sort_keys=True)


def ideals_from_rows(rows: Iterable[dict], table: VarTable) -> list[Ideal]:
    return [Ideal([parse_poly(g, table) for g in row["generators"]], table, row.get("label"))
            for row in rows]
