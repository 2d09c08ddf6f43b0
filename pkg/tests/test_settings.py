import pytest
from pydantic import ValidationError

from algebra.errors import RankBoundError
from settings.settings import RunConfig, check_rank, get_cache_dir, get_log_level, get_max_rank, parse_parts


def test_parse_parts():
    assert parse_parts("2,1") == (2, 1)
    assert parse_parts("(3, 1, 1)") == (3, 1, 1)
    with pytest.raises(ValueError):
        parse_parts("")
    with pytest.raises(ValueError):
        parse_parts("2,0")
    with pytest.raises(ValueError):
        parse_parts("a,b")


def test_environment_settings(monkeypatch, tmp_path):
    monkeypatch.setenv("HECKE_CACHE_DIR", str(tmp_path))
    monkeypatch.setenv("HECKE_MAX_RANK", "5")
    monkeypatch.setenv("HECKE_LOG_LEVEL", "debug")
    assert get_cache_dir() == str(tmp_path)
    assert get_max_rank() == 5
    assert get_log_level() == "DEBUG"


def test_blank_settings_fall_back_to_defaults(monkeypatch):
    monkeypatch.setenv("HECKE_MAX_RANK", "")
    monkeypatch.delenv("HECKE_LOG_LEVEL", raising=False)
    assert get_max_rank() == 8
    assert get_log_level() == "WARNING"


def test_check_rank(monkeypatch):
    monkeypatch.setenv("HECKE_MAX_RANK", "4")
    check_rank(4)
    check_rank(6, force=True)
    with pytest.raises(RankBoundError, match="--force"):
        check_rank(5)
    monkeypatch.setenv("HECKE_MAX_RANK", "four")
    with pytest.raises(RankBoundError):
        check_rank(2)


def test_run_config_parses_compositions():
    cfg = RunConfig(command="filtrate", subcommand="induce", lam="2,1", mu=(2, 1))
    assert cfg.lam == (2, 1)
    assert cfg.mu == (2, 1)
    assert cfg.format == "text"
    assert cfg.basis == "C"


def test_run_config_rejects_bad_values(monkeypatch):
    monkeypatch.setenv("HECKE_MAX_RANK", "4")
    with pytest.raises(ValidationError):
        RunConfig(command="klpoly", m=0)
    with pytest.raises(ValidationError):
        RunConfig(command="klpoly", m=5)
    with pytest.raises(ValidationError):
        RunConfig(command="filtrate", n=4)
    with pytest.raises(ValidationError):
        RunConfig(command="klpoly", m=3, format="xml")
    assert RunConfig(command="klpoly", m=5, force=True).m == 5
