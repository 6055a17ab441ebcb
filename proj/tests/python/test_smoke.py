import json
import pathlib

import jsonschema
import pytest

import mwlat

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMA = json.loads((ROOT / "data" / "schema" / "report.schema.json").read_text())


def test_analyze():
    res = mwlat.analyze("y^2 = x^3 - t^3 x + t")
    assert res["configuration"]["rank"] == 7
    jsonschema.validate({"command": "analyze", "inputs": {}, "results": res}, SCHEMA)


def test_base_change():
    res = mwlat.base_change("y^2 = x^3 - t0^3 t1 x + t0^4 t1^2", 5)
    assert res["after"]["text"] == "y^2 = x^3 - t0^3 t1 x + t0^2 t1^4"
    assert res["l_stable"]


def test_tables():
    t = mwlat.tables()
    jsonschema.validate({"command": "tables", "inputs": {}, "results": t}, SCHEMA)
    assert [r["kernel"]["text"] for r in t["table2"]] == ["0", "0", "0", "(Z/5)^2", "(Z/5)^2", "Z/5", "0", "0"]
    assert len(mwlat.classify()["rows"]) == 8


def test_cohomology():
    cyc = [[0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]
    assert mwlat.h1_cyclic(5, 4, cyc)["text"] == "Z/5"
    assert mwlat.h1_cyclic(2, 0, [[1]], torsion=[2])["invariant_factors"] == ["2"]
    assert mwlat.wc_kernel_rank_extremal(8, 5) == 2
    assert mwlat.coboundary_solve([1, -1, 0, 0, 0]) == [0, 1, 0, 0, 0]


def test_bounds():
    assert mwlat.ramification_points_for_genus_zero(7) == 2
    assert mwlat.semistable_rank_jump_bound(10, 2, 7) == 60
    assert mwlat.stability_threshold(68) == 71


def test_generators():
    res = mwlat.verify_generators("ell7_p7")
    assert res["count"] == 56 and res["trace"] == "(1/t^2, 1/t^3)"


def test_errors():
    with pytest.raises(mwlat.ParseError):
        mwlat.analyze("y^2 = x^3 + t0^5")
    with pytest.raises(mwlat.MathError):
        mwlat.h1_cyclic(5, 1, [[-1]])
    with pytest.raises(mwlat.FixtureError):
        mwlat.verify_generators("missing")
