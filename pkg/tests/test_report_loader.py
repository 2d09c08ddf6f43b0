import pytest

from utils.report_loader import (
    format_parts,
    format_permutation,
    format_poly,
    load_template,
    render_report,
)


def test_every_report_template_loads():
    for name in ("klpoly", "cbasis", "cells", "decomposition", "filtration", "specht_filtration", "claims", "selftest"):
        assert load_template(name) is load_template(name)


def test_filters():
    assert format_parts([2, 1]) == "(2,1)"
    assert format_parts([]) == "()"
    assert format_parts(None) == "()"
    assert format_permutation([2, 3, 1]) == "[2,3,1]"
    assert format_poly([[0, 1], [2, 1]]) == "1*v^0 + 1*v^2"


def test_load_template_reports_missing():
    with pytest.raises(FileNotFoundError):
        load_template("no_such_report")


def test_render_klpoly():
    report = {"m": 3, "polys": [{"x": [1, 2, 3], "y": [3, 2, 1], "p": [[0, 1]]}]}
    text = render_report("klpoly", report=report)
    assert "Kazhdan-Lusztig polynomials of S_3" in text
    assert "P[[1,2,3], [3,2,1]] = 1*v^0" in text


def test_render_claims():
    claims = [
        {"claim": "a", "mu": [2, 1], "lambda": [1], "checked": 3, "passed": True, "experimental": False, "counterexamples": []},
        {"claim": "b", "mu": None, "lambda": None, "checked": 1, "passed": False, "experimental": True, "counterexamples": ["x"]},
    ]
    text = render_report("claims", claims=claims)
    assert "[ok] a mu=(2,1) lambda=(1) (3 checked)" in text
    assert "[open] b (1 checked) [open question]" in text
    assert "    - x" in text
