from __future__ import annotations

import json

import pytest

from mayrmeyer import formats
from mayrmeyer.catalog import MMParams, k_family_ideal, mayr_meyer_ideal
from mayrmeyer.ideal import Ideal

P22 = MMParams.make(2, 2, 13)


def test_ideal_file_round_trip(tmp_path):
    J = mayr_meyer_ideal(P22)
    path = tmp_path / "J.ideal"
    formats.write_ideal(path, J, d=2, comment="J(2,2)")
    text = path.read_text()
    assert text.startswith("# J(2,2)\nring p=13 n=2 d=2\nvars s f c01")
    back, header = formats.read_ideal(path)
    assert header == {"p": 13, "n": 2, "d": 2}
    assert back.generators == J.generators


@pytest.mark.parametrize("dialect", ["singular", "macaulay2"])
def test_cas_script_round_trip(dialect):
    K = k_family_ideal(P22)
    script = formats.to_cas_script(K, dialect)
    assert formats.from_cas_script(script, dialect).generators == K.generators


def test_singular_script_shape():
    script = formats.to_cas_script(mayr_meyer_ideal(P22), "singular")
    assert script.startswith("ring R = 13, (s, f, c01,")
    assert "dp;" in script and "std(I)" in script


def test_bad_files():
    with pytest.raises(formats.IdealFileError):
        formats.loads_ideal("vars x y\nx\n")
    with pytest.raises(formats.IdealFileError):
        formats.loads_ideal("ring p=13\nvars x y\nx + q\n")
    with pytest.raises(ValueError):
        formats.to_cas_script(mayr_meyer_ideal(P22), "maple")


def test_catalog_json():
    doc = json.loads(formats.catalog_json(P22, "minimal"))
    assert doc["p"] == 13 and len(doc["entries"]) == 28
    row = doc["entries"][0]
    assert row["family"] == "P0" and row["claimed_height"] == row["height"] == 4
    ideals = formats.ideals_from_rows(doc["entries"], mayr_meyer_ideal(P22).table)
    assert all(isinstance(I, Ideal) for I in ideals)
