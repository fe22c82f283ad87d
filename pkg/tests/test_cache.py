import multiprocessing as mp

import pytest

from qgalois import cache, galois
from qgalois.cache import CacheError, CacheFile, CacheVersionError
from qgalois.galois import TauTable


def _table(keys):
    t = TauTable()
    for key in keys:
        galois.tau(*key, table=t)
    return t


@pytest.fixture
def filled(tmp_path):
    path = tmp_path / "tau.cache"
    CacheFile.from_table(_table([(2, 1, 0), (-2, 0, 1), (0, 1, 1)])).save(path)
    return path


def test_round_trip_is_byte_identical(filled):
    text = filled.read_text(encoding="utf-8")
    cf = CacheFile.load(filled, verify=True)
    assert not cf.rejected
    assert cf.dumps() == text
    for key, value in cf.entries.items():
        assert value == galois.tau(*key)


def test_entries_sorted(filled):
    keys = [tuple(map(int, line.split()[1:4])) for line in filled.read_text().splitlines()
            if line.startswith("entry ")]
    assert keys == sorted(keys)


def test_corrupt_entry_rejected_and_gc(filled):
    lines = filled.read_text().split("\n")
    i = next(j for j, l in enumerate(lines) if l.startswith("entry 2 1 0")) + 1
    _c, left, right = lines[i].split("\t")
    lines[i] = f"5\t{left}\t{right}"
    filled.write_text("\n".join(lines))
    cf = cache.check(filled)
    assert cf.rejected == [(2, 1, 0)]
    assert cache.gc(filled) == [(2, 1, 0)]
    assert (2, 1, 0) not in CacheFile.load(filled).entries
    assert not cache.check(filled).rejected


def test_version_and_convention_mismatch(filled):
    text = filled.read_text()
    with pytest.raises(CacheVersionError):
        CacheFile.loads(text.replace("format 1", "format 2"))
    with pytest.raises(CacheVersionError):
        CacheFile.loads(text.replace("basis P z1 z2", "basis P z2 z1"))
    with pytest.raises(CacheError):
        CacheFile.loads("hello\n")
    with pytest.raises(CacheError):
        CacheFile.loads(text.replace("\nend\n", "\n"))


def test_fill_and_store(tmp_path):
    path = tmp_path / "c.txt"
    t = _table([(1, 0, 1)])
    cache.store(t, path)
    fresh = TauTable(verify=True)
    assert cache.load_into(fresh, path) == len(t)
    assert galois.tau(1, 0, 1, table=fresh) == galois.tau(1, 0, 1)
    # merging keeps old entries
    cache.store(_table([(-1, 1, 0)]), path)
    keys = set(CacheFile.load(path).entries)
    assert {(1, 0, 1), (-1, 1, 0)} <= keys
    with pytest.raises(CacheError):
        CacheFile.load(path).fill(TauTable(path="alternate"))


def _writer(path, key):
    cache.store(_table([key]), path)


def test_concurrent_writers_do_not_tear(tmp_path):
    path = tmp_path / "shared.cache"
    keys = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0)]
    ctx = mp.get_context("fork")
    procs = [ctx.Process(target=_writer, args=(path, k)) for k in keys]
    for p in procs:
        p.start()
    for p in procs:
        p.join()
    cf = CacheFile.load(path, verify=True)
    assert not cf.rejected
    assert (0, 0, 0) in cf.entries
    assert CacheFile.loads(cf.dumps()).dumps() == path.read_text()
