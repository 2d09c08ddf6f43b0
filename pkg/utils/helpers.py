"""
Common Utility Functions

Parsing of command-line values and deterministic JSON output shared by the
command-line front end and the report templates.
"""

import json
from typing import Any, Optional

from pydantic import BaseModel

from algebra.errors import PreconditionError
from algebra.symgroup import Permutation


def parse_permutation(text: str, m: Optional[int] = None) -> Permutation:
    """
    Parse a permutation given in one-line form.

    Accepts "2,3,1", "[2,3,1]", "231" (ranks below 10) or "e" for the identity,
    which needs the rank m.

    Raises:
        PreconditionError: on malformed input or a rank different from m
    """
    cleaned = text.strip().strip("()[]").replace(" ", "")
    if not cleaned:
        raise PreconditionError("empty permutation")
    if cleaned == "e":
        if m is None:
            raise PreconditionError("the identity 'e' needs an explicit rank --m")
        return Permutation.identity(m)
    try:
        images = [int(p) for p in cleaned.split(",")] if "," in cleaned else [int(c) for c in cleaned]
    except ValueError:
        raise PreconditionError(f"malformed permutation: {text!r}")
    w = Permutation(images)
    if m is not None and w.rank != m:
        raise PreconditionError(f"{text!r} has rank {w.rank}, expected {m}")
    return w


def to_jsonable(data: Any) -> Any:
    if isinstance(data, BaseModel):
        return data.model_dump(mode="json", by_alias=True)
    if isinstance(data, list):
        return [to_jsonable(item) for item in data]
    return data


def dump_json(data: Any) -> str:
    """Byte-stable JSON: sorted keys, two-space indentation, trailing newline."""
    return json.dumps(to_jsonable(data), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
