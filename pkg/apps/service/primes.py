"""
분할 에라토스테네스 체 (홀수 전용 비트맵, numpy)

- 기본 소수(≤ √limit)는 한 번만 구하고, 각 구간 [lo, hi) 는 자기 비트맵만 가진다.
- 구간은 스레드 풀로 병렬 체질하되 결과는 구간 인덱스 순서로 합쳐 항상 같은 값을 낸다.
- 블록(chiliad 1000 / myriad 10000) 카운트는 선택적으로 파일 캐시(sieve_cache)에 저장한다.
  π(x) 는 캐시된 블록 경계까지 누적값을 쓰고 나머지 구간만 체질한다.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from functools import lru_cache

import numpy as np
from django.conf import settings

from apps.exceptions import AlignmentError, DomainError, LimitExceededError
from apps.models import CountingConvention, PrimeCounts, SieveSegment
from apps.service import sieve_cache
from apps.service.realnum import RealContext, get_context

logger = logging.getLogger(__name__)

BLOCK_SIZES = (1000, 10000)

_SIEVE_DEFAULTS = {
    'LIMIT': 10 ** 8,
    'SEGMENT_SIZE': 2 ** 18,
    'WORKERS': 4,
    'CACHE_PATH': '',
}


# 명령 실행 동안 CACHE_PATH 를 바꾸는 값 (--sieve-cache)
_cache_path_override: str | None = None


def _sieve_config() -> dict:
    """settings.SIEVE 를 기본값과 병합"""
    cfg = getattr(settings, 'SIEVE', None) or {}
    merged = {**_SIEVE_DEFAULTS, **cfg}
    if _cache_path_override is not None:
        merged['CACHE_PATH'] = _cache_path_override
    return merged


@contextmanager
def sieve_cache_path(path: str | None):
    """with 블록 안에서 블록 카운트 캐시 경로를 path 로 (None 이면 설정값 그대로)"""
    global _cache_path_override
    previous = _cache_path_override
    if path is not None:
        _cache_path_override = str(path)
    try:
        yield
    finally:
        _cache_path_override = previous


def sieve_limit() -> int:
    return int(_sieve_config()['LIMIT'])


def simple_sieve(limit: int) -> np.ndarray:
    """limit 이하 소수 (단순 체, 기본 소수용)"""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p:: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def sieve_segment(lo: int, hi: int, base_primes: np.ndarray) -> SieveSegment:
    """[lo, hi) 홀수 합성수 표시. base_primes 는 √hi 이상까지 포함해야 한다"""
    first_odd = lo | 1
    odd_count = max(0, (hi - first_odd + 1) // 2)
    composite = np.zeros(odd_count, dtype=bool)
    if odd_count and first_odd == 1:
        composite[0] = True  # 1 은 소수가 아님
    for p in base_primes:
        p = int(p)
        if p == 2:
            continue
        square = p * p
        if square >= hi:
            break
        start = max(square, -(-first_odd // p) * p)
        if start % 2 == 0:
            start += p
        if start < hi:
            composite[(start - first_odd) // 2:: p] = True
    return SieveSegment(lo=lo, hi=hi, composite=composite)


def _segment_bounds(stop: int, segment_size: int, start: int = 0) -> list[tuple[int, int]]:
    """[start, stop) 를 segment_size 폭으로 나눈 반개구간 목록"""
    return [(lo, min(lo + segment_size, stop)) for lo in range(start, stop, segment_size)]


def _normalized_segment_size(segment_size: int | None) -> int:
    size = int(segment_size or _sieve_config()['SEGMENT_SIZE'])
    if size < 2:
        raise DomainError(f"구간 폭은 2 이상이어야 합니다: {size}")
    return size + (size % 2)


def _map_segments(stop: int, per_segment, segment_size: int | None = None, start: int = 0) -> list:
    """[start, stop) 구간별로 per_segment(SieveSegment) 를 병렬 실행, 구간 순서대로 결과 반환"""
    size = _normalized_segment_size(segment_size)
    base = simple_sieve(math.isqrt(max(stop, 4)) + 1)
    bounds = _segment_bounds(stop, size, start)

    def work(bound):
        return per_segment(sieve_segment(bound[0], bound[1], base))

    workers = max(1, int(_sieve_config()['WORKERS']))
    if workers == 1 or len(bounds) == 1:
        return [work(b) for b in bounds]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(work, bounds))


def primes_upto(limit: int, segment_size: int | None = None) -> np.ndarray:
    """limit 이하 모든 소수"""
    if limit < 2:
        return np.array([], dtype=np.int64)
    parts = _map_segments(limit + 1, lambda seg: seg.primes(), segment_size)
    return np.concatenate(parts)


def _check_limit(x: int) -> None:
    if x > sieve_limit():
        raise LimitExceededError(f"체 상한 {sieve_limit()} 을 넘는 요청입니다: {x}")


def prime_pi_many(points, segment_size: int | None = None) -> list[int]:
    """여러 점에서 현대 규약 π(x) 를 한 번의 체질로 (입력 순서대로)"""
    points = [int(p) for p in points]
    if not points:
        return []
    top = max(points)
    _check_limit(top)
    if top < 2:
        return [0] * len(points)
    boundaries, prefixes = _cached_prefixes(points)
    targets = np.asarray(points, dtype=np.int64)
    # 블록 경계는 1000 의 배수(짝수)라 소수가 아니므로 나머지는 (경계, x]
    starts = np.asarray(boundaries, dtype=np.int64) + 1
    pending = [i for i, x in enumerate(points) if starts[i] <= x]
    if not pending:
        logger.info("체 캐시로 π(x) %s개를 체질 없이 계산", len(points))
        return [int(v) for v in prefixes]

    def count_in_remainders(segment: SieveSegment):
        found = segment.primes()
        return np.searchsorted(found, targets, side='right') - np.searchsorted(found, starts, side='left')

    per_segment = []
    for lo, hi in _merged_intervals([(int(starts[i]), points[i] + 1) for i in pending]):
        per_segment.extend(_map_segments(hi, count_in_remainders, segment_size, start=lo))
    totals = np.asarray(prefixes, dtype=np.int64) + np.sum(per_segment, axis=0)
    return [int(v) for v in totals]


def _merged_intervals(intervals: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """겹치거나 맞닿은 반개구간을 합쳐 정렬된 목록으로"""
    merged: list[tuple[int, int]] = []
    for lo, hi in sorted(intervals):
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def _cached_prefixes(points: list[int]) -> tuple[list[int], list[int]]:
    """
    점마다 캐시로 셀 수 있는 가장 긴 블록 경계 b ≤ x 와 π(b - 1)

    캐시가 없으면 (0, 0). 나머지 (b, x] 만 체질하면 된다.
    """
    boundaries = [0] * len(points)
    prefixes = [0] * len(points)
    sections = sieve_cache.load_sections(_sieve_config()['CACHE_PATH'])
    for block_size, (cached_limit, counts) in sections.items():
        cumulative = np.concatenate(([0], np.cumsum(counts)))
        for i, x in enumerate(points):
            blocks = min(x // block_size, cached_limit // block_size)
            if blocks * block_size > boundaries[i]:
                boundaries[i] = blocks * block_size
                prefixes[i] = int(cumulative[blocks])
    return boundaries, prefixes


@lru_cache(maxsize=256)
def _modern_pi(x: int) -> int:
    return prime_pi_many([x])[0]


def prime_pi(x: int, conv: CountingConvention = CountingConvention.MODERN,
             segment_size: int | None = None) -> int:
    """
    x 이하 소수 개수

    Args:
        x: 2 ≤ x ≤ 10^8 (SIEVE['LIMIT'])
        conv: MODERN 또는 BESSEL_1810 (1 을 소수로 세므로 +1)
        segment_size: 구간 폭 (None 이면 설정값, 결과는 구간 폭과 무관)
    """
    x = int(x)
    if x < 2:
        raise DomainError(f"prime_pi 는 x ≥ 2 이어야 합니다: {x}")
    _check_limit(x)
    count = _modern_pi(x) if segment_size is None else prime_pi_many([x], segment_size)[0]
    if CountingConvention(conv) is CountingConvention.BESSEL_1810:
        return count + 1
    return count


def block_counts(limit: int, block_size: int, cache_path: str | None = None) -> PrimeCounts:
    """
    [0, limit) 를 block_size 블록으로 나눈 블록별 소수 개수

    Args:
        limit: block_size 의 배수, ≤ 10^8
        block_size: 1000 (chiliad) 또는 10000 (myriad)
        cache_path: 카운트 캐시 파일 (None 이면 SIEVE['CACHE_PATH'])
    """
    if block_size not in BLOCK_SIZES:
        raise AlignmentError(f"블록 크기는 {BLOCK_SIZES} 중 하나여야 합니다: {block_size}")
    if limit <= 0 or limit % block_size:
        raise AlignmentError(f"limit {limit} 이 블록 크기 {block_size} 의 배수가 아닙니다")
    _check_limit(limit)
    path = cache_path if cache_path is not None else _sieve_config()['CACHE_PATH']

    cached = sieve_cache.load_block_counts(path, limit, block_size)
    if cached is not None:
        logger.info("체 캐시 사용: limit=%s, block=%s", limit, block_size)
        return PrimeCounts(limit, block_size, [int(c) for c in cached])

    blocks = limit // block_size

    def count_blocks(segment: SieveSegment):
        return np.bincount(segment.primes() // block_size, minlength=blocks)[:blocks]

    per_segment = _map_segments(limit, count_blocks)
    counts = np.sum(per_segment, axis=0).astype(np.int64)
    sieve_cache.save_block_counts(path, limit, block_size, counts)
    return PrimeCounts(limit, block_size, [int(c) for c in counts])


def myriad_comparison(start: int, stop: int, block_size: int = 10000,
                      ctx: RealContext | None = None) -> list[dict]:
    """
    블록별 소수 개수와 같은 블록의 li 증분 li(b) - li(a) 비교 (myriad 단위 집계)

    Returns:
        [{'lo', 'hi', 'count', 'li_increment', 'difference'}, ...]
    """
    from apps.service.lifn import li_delta

    if start < block_size or start % block_size or stop % block_size or stop <= start:
        raise AlignmentError("start/stop 은 block_size 의 배수이고 block_size ≤ start < stop 이어야 합니다")
    ctx = ctx or get_context()
    counts = block_counts(stop, block_size)
    rows = []
    for i in range(start // block_size, stop // block_size):
        lo, hi = i * block_size, (i + 1) * block_size
        increment = li_delta(lo, hi, ctx)
        count = counts.block_counts[i]
        rows.append({'lo': lo, 'hi': hi, 'count': count,
                     'li_increment': increment, 'difference': increment - count})
    return rows


def mobius_upto(n: int) -> np.ndarray:
    """
    Möbius 함수 μ(k), 0 ≤ k ≤ n (인덱스 0 은 0)

    소인수별로 μ[p::p] 부호를 뒤집고 μ[p²::p²] 를 0 으로 (인수분해 체).
    """
    if n < 1:
        raise DomainError(f"mobius_upto 는 n ≥ 1 이어야 합니다: {n}")
    if n > 10 ** 6:
        raise LimitExceededError("mobius_upto 는 n ≤ 10^6 까지 지원합니다")
    mu = np.ones(n + 1, dtype=np.int8)
    mu[0] = 0
    for p in simple_sieve(n):
        p = int(p)
        mu[p:: p] *= -1
        mu[p * p:: p * p] = 0
    return mu


def euler_product_partial(s, n: int, ctx: RealContext | None = None):
    """
    (Σ_{k≤N} k^-s, Π_{p≤N} 1/(1 - p^-s))

    곱 쪽은 N-smooth 정수 전체의 합이므로 항상 합 쪽 이상이다.
    """
    ctx = ctx or get_context()
    mp = ctx.mp
    s = ctx.real(s)
    if s <= 1:
        raise DomainError("euler_product_partial 은 s > 1 이어야 합니다")
    if n < 2:
        raise DomainError("euler_product_partial 은 N ≥ 2 이어야 합니다")
    sum_side = mp.fsum(mp.power(k, -s) for k in range(1, n + 1))
    product_side = mp.fprod(1 / (1 - mp.power(int(p), -s)) for p in simple_sieve(n))
    return sum_side, product_side
