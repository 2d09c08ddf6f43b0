"""
Settings Management Module

Run configuration and environment-backed settings for the command-line
front end and the table builders.

Settings are read from environment variables, with a .env file loaded at
import time:
- HECKE_CACHE_DIR: directory holding cached KL tables
- HECKE_MAX_RANK: largest rank built without --force (default 8)
- HECKE_LOG_LEVEL: root log level for the CLI (default WARNING)
"""

import os
from typing import Literal, Optional, Tuple

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator, model_validator

from algebra.errors import RankBoundError

# Load environment variables from .env file
load_dotenv()

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DEFAULT_CACHE_DIR = os.path.join(PROJECT_ROOT, "settings", "cache")
DEFAULT_MAX_RANK = 8
DEFAULT_LOG_LEVEL = "WARNING"


def _get_setting(key: str, default: str = "") -> str:
    """Read a setting from the environment, falling back to default when unset or blank."""
    value = os.environ.get(key, "")
    return value if value else default


def get_cache_dir() -> str:
    return _get_setting("HECKE_CACHE_DIR", DEFAULT_CACHE_DIR)


def get_max_rank() -> int:
    raw = _get_setting("HECKE_MAX_RANK", str(DEFAULT_MAX_RANK))
    try:
        return int(raw)
    except ValueError:
        raise RankBoundError(f"HECKE_MAX_RANK must be an integer, got {raw!r}")


def get_log_level() -> str:
    return _get_setting("HECKE_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()


def check_rank(m: int, force: bool = False) -> None:
    """Refuse full-basis work on S_m above the configured bound unless forced."""
    bound = get_max_rank()
    if m > bound and not force:
        raise RankBoundError(
            f"rank {m} exceeds the safety bound {bound}; pass --force to override"
        )


def parse_parts(text: str) -> Tuple[int, ...]:
    """Parse '2,1' or '(2,1)' into a tuple of positive integers."""
    cleaned = text.strip().strip("()[]")
    if not cleaned:
        raise ValueError("empty composition")
    parts = tuple(int(p) for p in cleaned.split(","))
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive: {text!r}")
    return parts


class RunConfig(BaseModel):
    """Validated options of one CLI invocation."""

    command: str = Field(description="Top-level command name")
    subcommand: Optional[str] = Field(default=None, description="induce|restrict or verify|explore")
    m: Optional[int] = Field(default=None, description="Rank of the symmetric group")
    n: Optional[int] = Field(default=None, description="Rank of the smaller group for induction")
    lam: Optional[Tuple[int, ...]] = Field(default=None, description="Composition lambda")
    mu: Optional[Tuple[int, ...]] = Field(default=None, description="Composition mu")
    x: Optional[str] = Field(default=None, description="Permutation x (one-line or 'e')")
    y: Optional[str] = Field(default=None, description="Permutation y (one-line or 'e')")
    w: Optional[str] = Field(default=None, description="Representative of a right cell")
    all: bool = Field(default=False, description="Dump the whole table")
    basis: Literal["C", "Cprime"] = Field(default="C", description="Kazhdan-Lusztig basis to print")
    format: Literal["text", "json"] = Field(default="text", description="Output format")
    cache_dir: str = Field(default_factory=get_cache_dir, description="KL table cache directory")
    force: bool = Field(default=False, description="Override the rank safety bound")
    seed: int = Field(default=0, description="Seed for randomised property checks")
    experimental: bool = Field(default=False, description="Run experimental checks")
    filtration: bool = Field(default=False, description="Also verify the cell-module filtration")
    verbose: bool = Field(default=False, description="Debug logging")
    clear_cache: bool = Field(default=False, description="Delete cached KL tables before running")

    @field_validator("lam", "mu", mode="before")
    @classmethod
    def _parse_composition(cls, value):
        if value is None or isinstance(value, tuple):
            return value
        if isinstance(value, str):
            return parse_parts(value)
        return tuple(value)

    @field_validator("m", "n")
    @classmethod
    def _positive_rank(cls, value):
        if value is not None and value < 1:
            raise ValueError("rank must be at least 1")
        return value

    @model_validator(mode="after")
    def _rank_bound(self):
        for rank in (self.m, None if self.n is None else self.n + 1):
            if rank is not None:
                check_rank(rank, self.force)
        return self
