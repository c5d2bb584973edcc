import logging

from bei import cache
from bei.constructions import build_named
from bei.enumeration import relabelings


def test_cache_hit(tmp_path, monkeypatch, H):
    monkeypatch.setenv("BEI_CACHE_DIR", str(tmp_path))
    first = cache.cached_oracle(H)
    assert first.witness_j >= 0
    assert len(list(tmp_path.glob("*.json"))) == 1
    second = cache.cached_oracle(H)
    assert second.witness_j == -1
    assert (second.depth, second.dim, second.pd) == (first.depth, first.dim, first.pd)


def test_relabeled_hit(tmp_path, monkeypatch, H):
    monkeypatch.setenv("BEI_CACHE_DIR", str(tmp_path))
    cache.cached_oracle(H)
    for g in relabelings(H, 3, seed=9):
        assert cache.cache_key(g, "gf2") == cache.cache_key(H, "gf2")
        assert cache.cached_oracle(g).witness_j == -1
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_field_is_part_of_key(tmp_path, monkeypatch, P3):
    monkeypatch.setenv("BEI_CACHE_DIR", str(tmp_path))
    cache.cached_oracle(P3, field="gf2")
    cache.cached_oracle(P3, field="rational")
    assert len(list(tmp_path.glob("*.json"))) == 2


def test_corrupt_entry_recomputed(tmp_path, monkeypatch, caplog, H):
    monkeypatch.setenv("BEI_CACHE_DIR", str(tmp_path))
    cache.cached_oracle(H)
    (entry,) = tmp_path.glob("*.json")
    entry.write_text("{not json")
    with caplog.at_level(logging.WARNING, logger="bei.cache"):
        again = cache.cached_oracle(H)
    assert again.depth == 6 and again.witness_j >= 0
    assert "unreadable cache entry" in caplog.text
    assert cache.cached_oracle(H).witness_j == -1


def test_disabled_without_env(tmp_path):
    assert cache.cache_dir() is None
    assert cache.cached_oracle(build_named("P3")).depth == 4
    assert not list(tmp_path.iterdir())
