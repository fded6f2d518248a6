"""
분할 체 / 소수 개수 / Möbius 회귀 테스트.

기대값 출처:
- π(10) = 4, π(10^6) = 78498, π(10^7) = 664579 (공인 소수 개수 표)
- chiliad 카운트 0..10^4: 168, 135, 127, 120, 119, 114, 117, 107, 110, 112
- 시도 나눗셈 오라클 (10^5 이하)
"""
import math

import mpmath
import numpy as np
import pytest
from django.test import override_settings

from apps.exceptions import AlignmentError, DomainError, LimitExceededError
from apps.models import CountingConvention
from apps.service import primes, sieve_cache
from apps.service.primes import (
    block_counts,
    euler_product_partial,
    mobius_upto,
    myriad_comparison,
    prime_pi,
    prime_pi_many,
    primes_upto,
    simple_sieve,
)
from apps.service.realnum import get_context

CHILIADS_TO_10K = [168, 135, 127, 120, 119, 114, 117, 107, 110, 112]


def trial_division_primes(limit):
    return [n for n in range(2, limit + 1) if all(n % d for d in range(2, math.isqrt(n) + 1))]


@pytest.fixture(autouse=True)
def _fresh_caches():
    sieve_cache.clear_memory_cache()
    primes._modern_pi.cache_clear()
    yield
    sieve_cache.clear_memory_cache()
    primes._modern_pi.cache_clear()


# ── 체 ─────────────────────────────────────────────────
class TestSieve:
    def test_matches_trial_division(self):
        expected = trial_division_primes(10 ** 5)
        assert primes_upto(10 ** 5).tolist() == expected
        assert simple_sieve(10 ** 5).tolist() == expected

    @pytest.mark.parametrize('segment_size', [2 ** 15, 2 ** 18, 2 ** 20])
    def test_result_independent_of_segment_size(self, segment_size):
        assert prime_pi(10 ** 6, segment_size=segment_size) == 78498

    def test_odd_segment_size_and_tiny_segments(self):
        assert primes_upto(100, segment_size=7).tolist() == trial_division_primes(100)

    def test_small_limits(self):
        assert primes_upto(1).tolist() == []
        assert primes_upto(2).tolist() == [2]
        assert primes_upto(3).tolist() == [2, 3]


# ── π(x) ───────────────────────────────────────────────
class TestPrimePi:
    @pytest.mark.parametrize('x, expected', [(2, 1), (10, 4), (100, 25), (1000, 168), (10 ** 6, 78498)])
    def test_modern(self, x, expected):
        assert prime_pi(x) == expected

    @pytest.mark.slow
    def test_ten_million(self):
        assert prime_pi(10 ** 7) == 664579

    def test_bessel_convention_counts_one(self):
        assert prime_pi(1000, CountingConvention.BESSEL_1810) == 169
        assert prime_pi(10 ** 5, 'bessel1810') == 9593

    def test_many_points_in_input_order(self):
        assert prime_pi_many([1000, 10, 100000, 2]) == [168, 4, 9592, 1]

    @pytest.mark.parametrize('x', [1, 0, -5])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            prime_pi(x)

    @override_settings(SIEVE={'LIMIT': 10 ** 4})
    def test_limit_exceeded(self):
        assert prime_pi(10 ** 4) == 1229
        with pytest.raises(LimitExceededError):
            prime_pi(10 ** 4 + 1)


# ── 블록 카운트 ────────────────────────────────────────
class TestBlockCounts:
    def test_chiliads(self):
        counts = block_counts(10 ** 4, 1000, cache_path='')
        assert counts.block_counts == CHILIADS_TO_10K
        assert counts.total == 1229
        assert counts.pi_checkpoints[3000] == 430

    def test_myriads_sum_to_pi(self):
        counts = block_counts(10 ** 6, 10000, cache_path='')
        assert len(counts.block_counts) == 100
        assert counts.block_counts[0] == 1229
        assert counts.total == 78498

    @pytest.mark.parametrize('limit, size', [(10500, 1000), (10000, 500), (0, 1000)])
    def test_alignment(self, limit, size):
        with pytest.raises(AlignmentError):
            block_counts(limit, size, cache_path='')

    def test_cache_file_reused(self, tmp_path, monkeypatch):
        path = tmp_path / 'sieve' / 'blocks.bin'
        first = block_counts(20000, 1000, cache_path=str(path))
        assert path.exists()

        def boom(*args, **kwargs):
            raise AssertionError('캐시가 있으면 체질하지 않아야 함')

        sieve_cache.clear_memory_cache()
        monkeypatch.setattr(primes, '_map_segments', boom)
        again = block_counts(20000, 1000, cache_path=str(path))
        prefix = block_counts(10000, 1000, cache_path=str(path))
        assert again.block_counts == first.block_counts
        assert prefix.block_counts == CHILIADS_TO_10K

    def test_corrupted_cache_is_ignored(self, tmp_path, caplog):
        path = tmp_path / 'blocks.bin'
        path.write_bytes(b'not a sieve cache file at all....')
        with caplog.at_level('WARNING', logger='apps.service.sieve_cache'):
            counts = block_counts(10000, 1000, cache_path=str(path))
        assert counts.block_counts == CHILIADS_TO_10K
        assert any('형식 불일치' in r.message for r in caplog.records)

    def test_prime_pi_reads_configured_cache(self, tmp_path, monkeypatch):
        path = tmp_path / 'blocks.bin'
        block_counts(10000, 1000, cache_path=str(path))
        monkeypatch.setattr(primes, '_map_segments', lambda *a, **k: pytest.fail('체질 호출'))
        with override_settings(SIEVE={'CACHE_PATH': str(path)}):
            assert prime_pi(10000) == 1229

    def test_myriad_comparison(self):
        ctx = get_context()
        rows = myriad_comparison(10000, 100000, ctx=ctx)
        assert len(rows) == 9
        assert rows[0]['lo'] == 10000 and rows[-1]['hi'] == 100000
        assert sum(r['count'] for r in rows) == 9592 - 1229
        total = ctx.mp.fsum(r['li_increment'] for r in rows)
        assert abs(total - (ctx.real('9629.809001') - ctx.real('1246.137216'))) < ctx.real('1e-5')
        for r in rows:
            assert r['difference'] == r['li_increment'] - r['count']

    def test_myriad_comparison_alignment(self):
        with pytest.raises(AlignmentError):
            myriad_comparison(5000, 20000)


# ── 캐시 누적값으로 π(x) ────────────────────────────────
class TestCachedPrimePi:
    @pytest.fixture
    def chiliad_cache(self, tmp_path):
        path = tmp_path / 'blocks.bin'
        block_counts(20000, 1000, cache_path=str(path))
        sieve_cache.clear_memory_cache()
        return path

    @pytest.fixture
    def sieve_calls(self, monkeypatch):
        calls = []
        original = primes._map_segments

        def recording(stop, per_segment, segment_size=None, start=0):
            calls.append((start, stop))
            return original(stop, per_segment, segment_size, start=start)

        monkeypatch.setattr(primes, '_map_segments', recording)
        return calls

    def test_block_boundaries_need_no_sieving(self, chiliad_cache, sieve_calls):
        with override_settings(SIEVE={'CACHE_PATH': str(chiliad_cache)}):
            assert prime_pi_many([10000, 15000, 20000]) == [1229, 1754, 2262]
        assert sieve_calls == []

    def test_only_remainder_is_sieved(self, chiliad_cache, sieve_calls):
        with override_settings(SIEVE={'CACHE_PATH': str(chiliad_cache)}):
            assert prime_pi_many([12345]) == [len(trial_division_primes(12345))]
        assert sieve_calls == [(12001, 12346)]

    def test_points_beyond_cached_limit(self, chiliad_cache, sieve_calls):
        with override_settings(SIEVE={'CACHE_PATH': str(chiliad_cache)}):
            counts = prime_pi_many([5000, 25000, 999])
        assert counts == [669, len(trial_division_primes(25000)), 168]
        # 첫 블록 아래 점과 캐시 끝 너머의 나머지만 따로 체질
        assert sieve_calls == [(1, 1000), (20001, 25001)]

    def test_comparison_table_with_warm_cache(self, tmp_path, monkeypatch):
        from apps.service.approx import comparison_table

        path = tmp_path / 'myriads.bin'
        block_counts(10 ** 6, 10 ** 4, cache_path=str(path))
        sieve_cache.clear_memory_cache()
        monkeypatch.setattr(primes, '_map_segments', lambda *a, **k: pytest.fail('캐시가 있으면 체질하지 않아야 함'))
        with primes.sieve_cache_path(str(path)):
            rows = comparison_table((10000, 100000, 1000000))
        assert [r.pi_n for r in rows] == [1229, 9592, 78498]

    def test_cache_path_override_is_restored(self, tmp_path):
        before = primes._sieve_config()['CACHE_PATH']
        with primes.sieve_cache_path(str(tmp_path / 'x.bin')):
            assert primes._sieve_config()['CACHE_PATH'] == str(tmp_path / 'x.bin')
        assert primes._sieve_config()['CACHE_PATH'] == before
        with primes.sieve_cache_path(None):
            assert primes._sieve_config()['CACHE_PATH'] == before


# ── 블록 크기별 캐시 섹션 ───────────────────────────────
class TestCacheSections:
    def test_block_sizes_do_not_evict_each_other(self, tmp_path, monkeypatch):
        path = tmp_path / 'blocks.bin'
        myriads = block_counts(20000, 10000, cache_path=str(path))
        chiliads = block_counts(20000, 1000, cache_path=str(path))
        sieve_cache.clear_memory_cache()

        monkeypatch.setattr(primes, '_map_segments', lambda *a, **k: pytest.fail('체질 호출'))
        assert block_counts(20000, 10000, cache_path=str(path)).block_counts == myriads.block_counts
        assert block_counts(20000, 1000, cache_path=str(path)).block_counts == chiliads.block_counts
        assert sorted(sieve_cache.load_sections(path)) == [1000, 10000]

    def test_shorter_run_keeps_longer_section(self, tmp_path):
        path = tmp_path / 'blocks.bin'
        block_counts(20000, 1000, cache_path=str(path))
        sieve_cache.save_block_counts(path, 10000, 1000, CHILIADS_TO_10K)
        sieve_cache.clear_memory_cache()
        limit, counts = sieve_cache.load_sections(path)[1000]
        assert limit == 20000
        assert counts[:10].tolist() == CHILIADS_TO_10K

    def test_truncated_section_is_ignored(self, tmp_path, caplog):
        path = tmp_path / 'blocks.bin'
        block_counts(10000, 1000, cache_path=str(path))
        path.write_bytes(path.read_bytes()[:-8])
        sieve_cache.clear_memory_cache()
        with caplog.at_level('WARNING', logger='apps.service.sieve_cache'):
            assert sieve_cache.load_block_counts(path, 10000, 1000) is None
        assert any('길이 불일치' in r.message for r in caplog.records)


# ── Möbius / Euler 곱 ───────────────────────────────────
class TestMobius:
    def test_first_values(self):
        mu = mobius_upto(30)
        assert mu[1:11].tolist() == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
        assert mu[30] == -1
        assert mu[0] == 0

    def test_mertens_partial_sum(self):
        # M(1000) = 2
        assert int(np.sum(mobius_upto(1000), dtype=np.int64)) == 2

    def test_domain(self):
        with pytest.raises(DomainError):
            mobius_upto(0)
        with pytest.raises(LimitExceededError):
            mobius_upto(10 ** 6 + 1)


class TestEulerProduct:
    def test_s2_large_n(self):
        ctx = get_context()
        zeta2 = ctx.mp.pi ** 2 / 6
        sum_side, product_side = euler_product_partial(2, 10 ** 4, ctx)
        assert sum_side <= product_side < zeta2
        assert zeta2 - sum_side < ctx.real('1.0001e-4')
        assert zeta2 - product_side < ctx.real('1e-4')

    def test_s2_small_n(self):
        ctx = get_context()
        sum_side, product_side = euler_product_partial(2, 10, ctx)
        # 2,3,5,7-smooth 수의 합이라 곱 쪽이 확실히 크다
        assert product_side - sum_side > ctx.real('0.04')

    def test_s4(self):
        ctx = get_context()
        zeta4 = ctx.mp.pi ** 4 / 90
        sum_side, product_side = euler_product_partial(4, 1000, ctx)
        assert abs(sum_side - zeta4) < ctx.real('1e-9')
        assert abs(product_side - zeta4) < ctx.real('1e-9')
        assert mpmath.mpf(sum_side) <= mpmath.mpf(product_side)

    @pytest.mark.parametrize('s, n', [(1, 100), ('0.5', 100), (2, 1)])
    def test_domain(self, s, n):
        with pytest.raises(DomainError):
            euler_product_partial(s, n)
