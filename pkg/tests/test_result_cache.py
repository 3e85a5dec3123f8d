"""
Tests for the on-disk result cache
"""
import json

from qtcatalan.schemas import CheckReport, content_hash


class TestResultCache:
    """Content-hashed JSON entries"""

    def test_miss_then_hit(self, cache):
        calls = []

        def compute():
            calls.append(1)
            return [{'q': 1, 't': 0, 'c': '1'}]

        first = cache.get_or_compute('pc', {'m': 1, 'n': 2}, compute)
        second = cache.get_or_compute('pc', {'n': 2, 'm': 1}, compute)
        assert first == second
        assert len(calls) == 1

    def test_layout(self, cache):
        path = cache.put('rc', {'m': 2, 'n': 3}, [])
        assert path.parent.name == 'rc'
        assert path.suffix == '.json'
        assert path == cache.path_for('rc', {'n': 3, 'm': 2})

    def test_tampered_entry_recomputed(self, cache):
        path = cache.put('dc', {'m': 1, 'n': 3}, [{'q': 0, 't': 0, 'c': '1'}])
        data = json.loads(path.read_text())
        data['payload'] = [{'q': 0, 't': 0, 'c': '2'}]
        path.write_text(json.dumps(data))
        assert cache.get('dc', {'m': 1, 'n': 3}) is None

    def test_garbage_file(self, cache):
        path = cache.put('wc', {'m': 1, 'n': 1}, [])
        path.write_text("not json")
        assert cache.get('wc', {'m': 1, 'n': 1}) is None

    def test_absent(self, cache):
        assert cache.get('ac', {'m': 1, 'n': 9}) is None

    def test_no_stray_temporary_files(self, cache):
        cache.put('pc', {'m': 1, 'n': 4}, [1, 2, 3])
        assert not list(cache.root.rglob('*.tmp'))


class TestSchemas:
    """Report and hashing helpers"""

    def test_content_hash_ignores_key_order(self):
        assert content_hash({'a': 1, 'b': 2}) == content_hash({'b': 2, 'a': 1})

    def test_report_summary(self):
        report = CheckReport(check='compare', parameters={'n': 3, 'm': 1}, verdict='pass', wall_time=0.5)
        assert not report.failed
        assert report.summary().startswith('[PASS   ] compare(m=1, n=3)')
