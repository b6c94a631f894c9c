from __future__ import annotations

import json

from mayrmeyer import formats
from mayrmeyer.cli import main


def test_gen_j(tmp_path):
    out = tmp_path / "J.ideal"
    assert main(["gen", "--family", "J", "--n", "2", "--d", "2", "--out", str(out)]) == 0
    I, header = formats.read_ideal(out)
    assert len(I.generators) == 17 and header["p"] == 13


def test_gen_family_directory(tmp_path):
    assert main(["gen", "--family", "minimal", "--out", str(tmp_path / "m")]) == 0
    assert len(list((tmp_path / "m").glob("*.ideal"))) == 28
    assert main(["gen", "--family", "minimal"]) == 2


def test_catalog_rows(capsys):
    assert main(["catalog", "--n", "2", "--d", "2", "--role", "minimal"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 1 + 28


def test_catalog_json(capsys):
    assert main(["catalog", "--role", "minimal", "--json", "--no-heights"]) == 0
    assert len(json.loads(capsys.readouterr().out)["entries"]) == 28


def test_op_and_gb(tmp_path, capsys):
    src = tmp_path / "I.ideal"
    src.write_text("ring p=13\nvars x y\nx*y\nx^2\n")
    out = tmp_path / "C.ideal"
    assert main(["op", "colon", str(src), "--poly", "x", "--out", str(out)]) == 0
    assert {str(g) for g in formats.read_ideal(out)[0].generators} == {"x", "y"}
    assert main(["op", "member", str(src), "--poly", "x^2*y"]) == 0
    assert main(["op", "member", str(src), "--poly", "y"]) == 1
    assert main(["op", "equals", str(src), str(src)]) == 0
    assert main(["op", "colon", str(src)]) == 2
    capsys.readouterr()
    assert main(["gb", str(src), "--order", "lex"]) == 0
    assert capsys.readouterr().out.split() == ["x^2", "x*y"]


def test_export(capsys):
    assert main(["export", "--dialect", "macaulay2"]) == 0
    assert capsys.readouterr().out.startswith("R = ZZ/13[")


def test_bench(capsys):
    assert main(["bench", "--n", "2", "--d", "2"]) == 0
    assert capsys.readouterr().out.startswith("family,n,d,p,maxdeg,basis_size,spairs,ms\nJ,2,2,13,")


def test_usage_errors():
    assert main([]) == 2
    assert main(["verify", "--check", "nope"]) == 2
    assert main(["verify", "--n", "2"]) == 2
    assert main(["gen", "--n", "1"]) == 2
    assert main(["gen", "--n", "2", "--d", "5", "--prime", "13"]) == 2


def test_verify_exit_codes(capsys):
    assert main(["verify", "--n", "2", "--d", "2", "--check", "not_radical", "--json", "--no-timing"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["verdict"] == "pass" and rep["millis"] is None
