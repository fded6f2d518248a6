"""
π(x) 근사식 계산 및 비교

- PrimeCountApproximator: 근사식별 계산 (x/ln x, Legendre, Encke, 이산합 등)
- approx_value(): ApproxMethod 로 분기
- riemann_R(): Möbius 가중 li 합
- chebyshev_ratio(), legendre_ratio_table(): 비율 관찰 재현
- fit_legendre_constant(): Legendre 상수 A 최소제곱 적합
- comparison_table(): π(n) 대 x/ln x, Legendre, li 비교표
"""
import logging
import math
from fractions import Fraction

from apps.exceptions import DomainError
from apps.models import (
    LEGENDRE_A,
    ApproxMethod,
    ApproxTag,
    ComparisonRow,
    LiConvention,
)
from apps.service.lifn import li
from apps.service.primes import mobius_upto, prime_pi, prime_pi_many, sieve_limit
from apps.service.realnum import RealContext, get_context, round_half_up

logger = logging.getLogger(__name__)

# 이산합 묶음 크기 (묶음마다 debug 로그)
_SUM_CHUNK = 10 ** 5

# Legendre 상수 적합: 거친 격자 [0, 2], 0.01 간격
_FIT_GRID_POINTS = 201  # A = i/100, i = 0..200
_FIT_X_MIN = 10 ** 3
_FIT_X_MAX = 10 ** 8

COMPARISON_COLUMNS = ('x_over_lnx', 'legendre', 'li')
COMPARATIVA_NS = (1000, 10000, 50000, 100000, 500000, 1000000, 10000000)


class PrimeCountApproximator:
    """π(x) 근사식 모음. x 는 컨텍스트의 mpf 로 받는다"""

    @staticmethod
    def x_over_lnx(x, ctx: RealContext):
        return x / ctx.mp.ln(x)

    @staticmethod
    def legendre(x, A, ctx: RealContext):
        """x / (ln x - A). ln x ≤ A 이면 DomainError"""
        denominator = ctx.mp.ln(x) - A
        if denominator <= 0:
            raise DomainError(f"Legendre 식은 ln x > A 이어야 합니다 (A={A})")
        return x / denominator

    @staticmethod
    def legendre_general(x, A, B, ctx: RealContext):
        """x / (A ln x + B)"""
        denominator = A * ctx.mp.ln(x) + B
        if denominator <= 0:
            raise DomainError("Legendre 일반식의 분모 A·ln x + B 가 양수가 아닙니다")
        return x / denominator

    @staticmethod
    def legendre_1798(x, ctx: RealContext):
        """x / (2·log10 x): 비율표에서 읽은 첫 경험식"""
        return x / (2 * ctx.mp.log10(x))

    @staticmethod
    def encke(x, ctx: RealContext):
        """x/ln x · 10^(1/(2 ln x)), 지수 안의 로그는 자연로그"""
        mp = ctx.mp
        lnx = mp.ln(x)
        return x / lnx * mp.power(10, 1 / (2 * lnx))

    @staticmethod
    def discrete_sum(x, shift, ctx: RealContext):
        """Σ_{2≤n≤x} 1/ln(n + shift), 작업 정밀도 mpmath 로 묶음별 fsum"""
        mp = ctx.mp
        top = int(mp.floor(x))
        shift = ctx.real(shift)
        partials = []
        for lo in range(2, top + 1, _SUM_CHUNK):
            hi = min(lo + _SUM_CHUNK, top + 1)
            partials.append(mp.fsum(1 / mp.ln(n + shift) for n in range(lo, hi)))
            logger.debug("이산합 %s..%s 완료", lo, hi - 1)
        return mp.fsum(partials)


def approx_value(method: ApproxMethod, x, ctx: RealContext | None = None):
    """
    근사식 값

    Args:
        method: ApproxMethod (tag + params)
        x: x ≥ 2

    Raises:
        DomainError: x < 2, 또는 Legendre 분모가 양수가 아닐 때
    """
    ctx = ctx or get_context()
    x = ctx.real(x)
    if x < 2:
        raise DomainError(f"approx_value 는 x ≥ 2 이어야 합니다: {ctx.mp.nstr(x, 10)}")
    tag = ApproxTag(method.tag)
    params = [ctx.real(p) if isinstance(p, str) else p for p in method.params]
    calc = PrimeCountApproximator

    if tag is ApproxTag.X_OVER_LNX:
        return calc.x_over_lnx(x, ctx)
    if tag is ApproxTag.LEGENDRE:
        return calc.legendre(x, params[0] if params else ctx.real(LEGENDRE_A), ctx)
    if tag is ApproxTag.LEGENDRE_GENERAL:
        A, B = params
        return calc.legendre_general(x, A, B, ctx)
    if tag is ApproxTag.LEGENDRE_1798:
        return calc.legendre_1798(x, ctx)
    if tag is ApproxTag.ENCKE:
        return calc.encke(x, ctx)
    if tag is ApproxTag.DISCRETE_SUM:
        return calc.discrete_sum(x, 0, ctx)
    if tag is ApproxTag.SHIFTED_SUM:
        return calc.discrete_sum(x, params[0] if params else ctx.real('0.5'), ctx)
    if tag is ApproxTag.LI_PV:
        return li(x, LiConvention.PV_FROM_ZERO, ctx)
    if tag is ApproxTag.LI_FROM2:
        return li(x, LiConvention.FROM_TWO, ctx)
    if tag is ApproxTag.RIEMANN_R:
        return riemann_R(x, int(params[0]) if params else 20, ctx)
    raise DomainError(f"알 수 없는 근사식: {method.tag}")


def riemann_R(x, nmax: int, ctx: RealContext | None = None):
    """
    Σ_{n=1..nmax} μ(n)/n · li(x^(1/n))

    x^(1/n) < 2 가 되면 이후 항은 버린다 (그 뒤로는 nmax 를 늘려도 값이 같다).
    그래서 Möbius 표는 min(nmax, ⌊log2 x⌋ + 1) 까지만 만든다.
    """
    ctx = ctx or get_context()
    mp = ctx.mp
    x = ctx.real(x)
    if x < 2:
        raise DomainError("riemann_R 은 x ≥ 2 이어야 합니다")
    if nmax < 1:
        raise DomainError("riemann_R 은 nmax ≥ 1 이어야 합니다")
    top = min(nmax, int(mp.floor(mp.log(x, 2))) + 1)
    mu = mobius_upto(top)
    terms = []
    for n in range(1, top + 1):
        root = mp.root(x, n)
        if root < 2:
            break
        if mu[n] == 0:
            continue
        terms.append(int(mu[n]) * li(root, LiConvention.PV_FROM_ZERO, ctx) / n)
    return mp.fsum(terms)


def chebyshev_ratio(x: int, ctx: RealContext | None = None):
    """π(x) / (x / ln x). 작은 x 에서는 Chebyshev 구간 [0.92129, 1.10555] 밖일 수 있다"""
    ctx = ctx or get_context()
    x = int(x)
    if x < 2:
        raise DomainError("chebyshev_ratio 는 x ≥ 2 이어야 합니다")
    value = ctx.real(x)
    return prime_pi(x) / (value / ctx.mp.ln(value))


def legendre_ratio_table(ks=range(1, 6)) -> list[dict]:
    """
    a = 10^k 에서 π(a)/a 와 1/(2k) 비교 (상용로그 기준, 정확한 분수)

    Returns:
        [{'k', 'a', 'ratio', 'legendre', 'relative_gap'}, ...]
        relative_gap = |π(a)·2k/a - 1|
    """
    rows = []
    points = [10 ** k for k in ks]
    counts = prime_pi_many(points)
    for k, a, count in zip(ks, points, counts):
        ratio = Fraction(count, a)
        expected = Fraction(1, 2 * k)
        rows.append({
            'k': k,
            'a': a,
            'ratio': ratio,
            'legendre': expected,
            'relative_gap': abs(ratio / expected - 1),
        })
    return rows


def _fit_samples(x_lo: int, x_hi: int, samples: int) -> list[int]:
    """[x_lo, x_hi] 로그 등간격 정수 표본 (중복 제거, 오름차순)"""
    if samples == 1:
        return [x_lo]
    lo, hi = math.log(x_lo), math.log(x_hi)
    points = {round(math.exp(lo + i * (hi - lo) / (samples - 1))) for i in range(samples)}
    return sorted(min(max(p, x_lo), x_hi) for p in points)


def fit_legendre_constant(x_lo: int, x_hi: int, samples: int = 16, ctx: RealContext | None = None):
    """
    Σ (π(x_i) - x_i/(ln x_i - A))² 를 최소화하는 A

    0.01 간격 격자 [0, 2] 에서 최소점을 찾은 뒤 이웃 구간에서 도함수 근을 구해 다듬는다.
    근 찾기가 실패하면 격자 최소점을 쓰고 경고를 남긴다.
    """
    ctx = ctx or get_context()
    mp = ctx.mp
    x_lo, x_hi = int(x_lo), int(x_hi)
    if not (_FIT_X_MIN <= x_lo < x_hi <= _FIT_X_MAX):
        raise DomainError(f"적합 구간은 10^3 ≤ x_lo < x_hi ≤ 10^8 이어야 합니다: [{x_lo}, {x_hi}]")
    if samples < 1:
        raise DomainError(f"표본 수는 1 이상이어야 합니다: {samples}")

    xs = _fit_samples(x_lo, x_hi, samples)
    pis = prime_pi_many(xs)
    data = [(ctx.real(x), mp.ln(x), ctx.real(p)) for x, p in zip(xs, pis)]

    def objective(A):
        return mp.fsum((p - x / (L - A)) ** 2 for x, L, p in data)

    def derivative(A):
        return mp.fsum(-2 * (p - x / (L - A)) * x / (L - A) ** 2 for x, L, p in data)

    grid = [mp.mpf(i) / 100 for i in range(_FIT_GRID_POINTS)]
    best_index = min(range(len(grid)), key=lambda i: objective(grid[i]))
    coarse = grid[best_index]
    if best_index in (0, len(grid) - 1):
        logger.warning("Legendre 상수 최소점이 격자 경계 %s 입니다 → 격자값 사용", mp.nstr(coarse, 4))
        return coarse

    lo, hi = grid[best_index - 1], grid[best_index + 1]
    if derivative(lo) * derivative(hi) > 0:
        logger.warning("도함수 부호가 바뀌지 않아 격자 최소점 %s 를 사용합니다", mp.nstr(coarse, 4))
        return coarse
    try:
        return mp.findroot(derivative, (lo, hi), solver='anderson', verify=False)
    except (ValueError, ZeroDivisionError) as e:
        logger.warning("Legendre 상수 다듬기 실패 (%s) → 격자 최소점 사용", e)
        return coarse


def comparison_table(ns=COMPARATIVA_NS, extra_methods=(), ctx: RealContext | None = None) -> list[ComparisonRow]:
    """
    π(n) 대 x/ln x, Legendre(1.08366), li (∫_2^n) 비교표

    columns 는 반올림(0.5 올림) 정수, values 는 원래 값. extra_methods 는 label 을 열 이름으로 덧붙인다.
    """
    ctx = ctx or get_context()
    ns = [int(n) for n in ns]
    if ns and max(ns) > sieve_limit():
        raise DomainError(f"비교표의 n 은 체 상한 {sieve_limit()} 이하여야 합니다")
    methods = {
        'x_over_lnx': ApproxMethod(ApproxTag.X_OVER_LNX),
        'legendre': ApproxMethod.legendre(),
        'li': ApproxMethod(ApproxTag.LI_FROM2),
    }
    for method in extra_methods:
        methods[method.label] = method

    rows = []
    for n, pi_n in zip(ns, prime_pi_many(ns)):
        values = {name: approx_value(method, n, ctx) for name, method in methods.items()}
        rows.append(ComparisonRow(
            n=n,
            pi_n=pi_n,
            columns={name: round_half_up(v) for name, v in values.items()},
            values=values,
        ))
    logger.info("비교표 %s 행 계산", len(rows))
    return rows


def ordering_holds(row: ComparisonRow) -> bool:
    """x/ln x < π(n) < li(n)"""
    return row.values['x_over_lnx'] < row.pi_n < row.values['li']


__all__ = [
    'COMPARATIVA_NS',
    'COMPARISON_COLUMNS',
    'PrimeCountApproximator',
    'approx_value',
    'chebyshev_ratio',
    'comparison_table',
    'fit_legendre_constant',
    'legendre_ratio_table',
    'ordering_holds',
    'riemann_R',
]
