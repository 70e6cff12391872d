import pytest

from zz_strips.catalog import catalog_entries
from zz_strips.config import Settings, get_settings, load_settings, resolve_limit
from zz_strips.dib_poset import antichain_poset
from zz_strips.oracle import enumerate_perfect_matchings
from zz_strips.order_polynomials import brute_force_strict_maps, extended_poly_subposet_sum
from zz_strips.strip_geometry import build_graph


def test_defaults_from_env_file(tmp_path, monkeypatch):
    for name in ("ZZ_GUARD_P", "ZZ_MAX_VERTICES", "ZZ_MAX_MAPS", "ZZ_WORKERS", "ZZ_LOG_LEVEL"):
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    env_file = tmp_path / ".env"
    env_file.write_text("ZZ_GUARD_P=12\nZZ_WORKERS=3\nZZ_LOG_LEVEL=debug\n", encoding="UTF8")
    settings = load_settings(env_file)
    assert settings.guard_p == 12
    assert settings.workers == 3
    assert settings.log_level == "DEBUG"
    assert settings.max_vertices == Settings.max_vertices


def test_process_environment_wins(tmp_path, monkeypatch):
    monkeypatch.setenv("ZZ_MAX_VERTICES", "30")
    env_file = tmp_path / ".env"
    env_file.write_text("ZZ_MAX_VERTICES=90\n", encoding="UTF8")
    assert load_settings(env_file).max_vertices == 30


@pytest.mark.parametrize("raw", ["abc", "0", "-4"])
def test_rejects_bad_integers(tmp_path, monkeypatch, raw):
    monkeypatch.setenv("ZZ_MAX_MAPS", raw)
    with pytest.raises(ValueError):
        load_settings(tmp_path / "missing.env")


def test_resolve_limit():
    assert resolve_limit(None, "guard_p") == get_settings().guard_p
    assert resolve_limit(7, "guard_p") == 7
    with pytest.raises(ValueError):
        resolve_limit(0, "max_vertices")
    with pytest.raises(ValueError):
        resolve_limit(-2, "workers")


def test_explicit_zero_limits_are_rejected(o32):
    with pytest.raises(ValueError):
        brute_force_strict_maps(antichain_poset(2), 2, max_maps=0)
    with pytest.raises(ValueError):
        extended_poly_subposet_sum(antichain_poset(2), 2, guard_p=0)
    with pytest.raises(ValueError):
        enumerate_perfect_matchings(build_graph(o32), max_vertices=0)
    with pytest.raises(ValueError):
        catalog_entries(2, workers=0)
