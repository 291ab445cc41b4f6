import json
import multiprocessing as mp

import pytest

from linkinv.store import Store, cache_key, default_path


def test_put_get(tmp_path):
    s = Store(tmp_path / "c.jsonl")
    k = cache_key("code", "jones", {"v": 1})
    assert s.get(k) is None
    s.put(k, {"value": [[0, 1]]})
    assert s.get(k) == {"value": [[0, 1]]}


def test_key_depends_on_all_parts():
    keys = {cache_key("a", "jones"), cache_key("b", "jones"), cache_key("a", "det"), cache_key("a", "jones", {"q": 3})}
    assert len(keys) == 4


def test_version_mismatch_is_miss(tmp_path):
    p = tmp_path / "c.jsonl"
    Store(p, version="old").put("k", 1)
    assert Store(p, version="new").get("k") is None
    assert Store(p, version="old").get("k") == 1


def test_corrupt_line_skipped(tmp_path, caplog):
    p = tmp_path / "c.jsonl"
    s = Store(p)
    s.put("a", 1)
    with open(p, "a") as fh:
        fh.write("{not json\n")
    s.put("b", 2)
    with caplog.at_level("WARNING"):
        assert s.get("a") == 1 and s.get("b") == 2
    assert "corrupt" in caplog.text


def test_last_writer_wins(tmp_path):
    s = Store(tmp_path / "c.jsonl")
    s.put("k", 1)
    s.put("k", 1)
    assert s.stats()["keys"] == 1


def test_fetch_and_spot_check(tmp_path):
    s = Store(tmp_path / "c.jsonl")
    calls = []

    def compute():
        calls.append(1)
        return 7

    assert s.fetch("k", compute) == 7
    assert s.fetch("k", compute) == 7
    assert len(calls) == 1
    assert s.fetch("k", compute, spot_check=1.0) == 7
    assert len(calls) == 2
    with pytest.raises(RuntimeError):
        s.fetch("k", lambda: 8, spot_check=1.0)


def _writer(path, i):
    s = Store(path)
    for j in range(50):
        s.put(f"k{j}", j)


def test_concurrent_writers(tmp_path):
    p = tmp_path / "c.jsonl"
    procs = [mp.Process(target=_writer, args=(str(p), i)) for i in range(4)]
    for pr in procs:
        pr.start()
    for pr in procs:
        pr.join()
    lines = p.read_text().splitlines()
    assert len(lines) == 200
    assert all(json.loads(line)["key"].startswith("k") for line in lines)
    assert Store(p).stats()["keys"] == 50


def test_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("LINKINV_CACHE", str(tmp_path / "x.jsonl"))
    assert default_path() == tmp_path / "x.jsonl"


def test_clear(tmp_path):
    s = Store(tmp_path / "c.jsonl")
    s.put("k", 1)
    s.clear()
    assert s.get("k") is None
