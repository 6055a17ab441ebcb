"""Rational elliptic surfaces under cyclic base change."""

import json
import os
import pathlib

_data = pathlib.Path(__file__).parent / "data" / "fixtures"
if "MWLAT_FIXTURE_DIR" not in os.environ and _data.is_dir():
    os.environ["MWLAT_FIXTURE_DIR"] = str(_data)

from . import _core
from ._core import (
    FixtureError,
    MathError,
    ParseError,
    coboundary_solve,
    ramification_points_for_genus_zero,
    semistable_rank_jump_bound,
    stability_threshold,
    wc_kernel_rank_extremal,
)


def analyze(model, field="", rho=10):
    return json.loads(_core._analyze(model, field, rho))


def base_change(model, p, field=""):
    return json.loads(_core._base_change(model, p, field))


def classify():
    return json.loads(_core._classify())


def tables():
    return json.loads(_core._tables())


def h1_cyclic(n, rank, sigma, torsion=()):
    """sigma is a list of rows; column j is the image of generator j."""
    return json.loads(_core._h1(json.dumps({"n": n, "rank": rank, "torsion": list(torsion), "sigma": sigma})))


def verify_generators(fixture):
    return json.loads(_core._verify_generators(fixture))
