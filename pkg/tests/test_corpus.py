"""The bundled examples recompute to their pinned values."""

import pytest

from propfox import GoldenMismatch
from propfox import corpus


def test_every_entry_loads():
    assert len(corpus.ENTRIES) == 11
    ids = [e.entry_id for e in corpus.ENTRIES]
    assert len(set(ids)) == len(ids)
    for entry in corpus.ENTRIES:
        assert entry.presentation
        assert entry.description


@pytest.mark.parametrize("entry_id", [e.entry_id for e in corpus.ENTRIES])
def test_entry_checks_pass(entry_id):
    results = corpus.run(entry_id)
    assert results, "an entry must carry at least one check"
    corpus.ensure(results)
    for r in results:
        assert r.ok, f"{r.name}: expected {r.expected}, got {r.actual}"
        assert r.source in ("stated", "derived")


def test_full_run_and_ensure():
    results = corpus.run()
    assert len(results) >= 90
    corpus.ensure(results)


def test_unknown_entry():
    with pytest.raises(KeyError):
        corpus.run("nope")


def test_ensure_raises_on_failure():
    results = corpus.run("eg-4.1-p3")
    broken = [
        corpus.CheckResult(r.entry, r.name, r.source, False, r.expected, "tampered")
        for r in results[:1]
    ]
    with pytest.raises(GoldenMismatch):
        corpus.ensure(broken)
