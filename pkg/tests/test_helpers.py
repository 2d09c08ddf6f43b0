import json

import pytest

from algebra.errors import PreconditionError
from algebra.schemas import ClaimReport
from algebra.symgroup import Permutation
from utils.helpers import dump_json, parse_permutation


def test_parse_permutation_forms():
    assert parse_permutation("2,3,1") == Permutation([2, 3, 1])
    assert parse_permutation("[2, 3, 1]") == Permutation([2, 3, 1])
    assert parse_permutation("231") == Permutation([2, 3, 1])
    assert parse_permutation("e", 3) == Permutation.identity(3)


@pytest.mark.parametrize("text,m", [("", None), ("e", None), ("2,x,1", None), ("221", None), ("21", 3)])
def test_parse_permutation_rejects(text, m):
    with pytest.raises(PreconditionError):
        parse_permutation(text, m)


def test_dump_json_is_stable():
    report = ClaimReport(claim="c", checked=1, passed=True, lam=[2, 1])
    text = dump_json(report)
    assert text.endswith("\n")
    payload = json.loads(text)
    assert payload["lambda"] == [2, 1]
    assert list(payload) == sorted(payload)
    assert dump_json([report]) == dump_json([report])
