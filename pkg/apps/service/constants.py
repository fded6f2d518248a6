"""
상수 γ (Euler-Mascheroni) 와 μ (Soldner, li 의 양의 근)

- euler_gamma: H_N - ln N 에 Euler-Maclaurin 보정을 더한 가속 계산 (실사용 경로)
- harmonic_gamma_limit: Euler 의 정의식 H_N - ln N 그대로 (느린 수렴, 비교용)
- soldner_mu: [1.1, 1.9] 이분법으로 폭 10^-3 까지 줄인 뒤 li'(x) = 1/ln x 로 Newton
"""
import logging
from functools import lru_cache

from django.conf import settings

from apps.exceptions import ConvergenceError, DomainError, PrecisionOverflowError
from apps.models import ConstantResult
from apps.service.realnum import RealContext, get_context, default_precision, guard_digits

logger = logging.getLogger(__name__)

# 역사적 인쇄값 (골든 파일 constants.csv 와 동일한 전사)
MASCHERONI_GAMMA = '0.57721566490153286061811209008239'
SOLDNER_GAMMA = '0.5772156649015328606065'
SOLDNER_MU = '1.4513692346'

_MU_BRACKET = ('1.1', '1.9')
_MU_BISECTION_WIDTH = '1e-3'
_MU_NEWTON_MAX_ITER = 60


def _digits_cap(key: str, default: int) -> int:
    cfg = getattr(settings, 'LOGINT', None) or {}
    return int(cfg.get(key, default))


def gamma_digits_max() -> int:
    return _digits_cap('GAMMA_DIGITS_MAX', 100)


def mu_digits_max() -> int:
    return _digits_cap('MU_DIGITS_MAX', 50)


def _check_digits(digits: int, cap: int) -> None:
    if digits < 1:
        raise DomainError(f"자릿수는 1 이상이어야 합니다: {digits}")
    if digits > cap:
        raise PrecisionOverflowError(f"요청 자릿수 {digits} 가 상한 {cap} 을 넘습니다")


def _context_for_digits(digits: int) -> RealContext:
    """출력 digits 자리 + guard 를 보장하는 컨텍스트"""
    return get_context(max(default_precision(), digits + guard_digits()))


@lru_cache(maxsize=None)
def _gamma_at(precision: int):
    ctx = get_context(precision)
    mp = ctx.mp
    # N 이 클수록 보정 급수의 최소항이 작아진다 (대략 e^(-2πN))
    n = precision // 2 + 10
    harmonic = mp.fsum(mp.mpf(1) / k for k in range(1, n + 1))
    value = harmonic - mp.ln(n) - mp.mpf(1) / (2 * n)
    tol = ctx.tolerance(4)
    for k in range(1, 10 * n):
        term = mp.bernoulli(2 * k) / (2 * k * mp.mpf(n) ** (2 * k))
        value += term
        if abs(term) < tol:
            return value
    raise ConvergenceError("γ Euler-Maclaurin 보정 급수가 수렴하지 않았습니다")


def gamma_value(ctx: RealContext | None = None):
    """작업 정밀도의 γ (정밀도별 캐시)"""
    ctx = ctx or get_context()
    return _gamma_at(ctx.precision)


def euler_gamma(digits: int) -> ConstantResult:
    """
    γ 를 소수점 이하 digits 자리까지

    Args:
        digits: 1 ≤ digits ≤ GAMMA_DIGITS_MAX (기본 100)

    Returns:
        ConstantResult(value, digits, 'euler-maclaurin', precision)
    """
    _check_digits(digits, gamma_digits_max())
    ctx = _context_for_digits(digits)
    return ConstantResult(gamma_value(ctx), digits, 'euler-maclaurin', ctx.precision)


def harmonic_gamma_limit(n: int, ctx: RealContext | None = None):
    """H_N - ln N. N → ∞ 에서 γ 로 (위에서) 수렴"""
    if n < 1:
        raise DomainError(f"N 은 1 이상이어야 합니다: {n}")
    ctx = ctx or get_context()
    mp = ctx.mp
    harmonic = mp.fsum(mp.mpf(1) / k for k in range(1, n + 1))
    return harmonic - mp.ln(n)


def soldner_mu(digits: int) -> ConstantResult:
    """
    li(μ) = 0 인 양의 근 μ

    Args:
        digits: 1 ≤ digits ≤ MU_DIGITS_MAX (기본 50)

    Returns:
        ConstantResult, |li(μ)| < 10^(-digits-2)
    """
    from apps.service.lifn import li_pv

    _check_digits(digits, mu_digits_max())
    ctx = _context_for_digits(digits)
    mp = ctx.mp

    lo, hi = ctx.real(_MU_BRACKET[0]), ctx.real(_MU_BRACKET[1])
    f_lo, f_hi = li_pv(lo, ctx), li_pv(hi, ctx)
    if not (f_lo < 0 < f_hi):
        raise ConvergenceError("μ 구간 [1.1, 1.9] 에서 li 의 부호가 바뀌지 않습니다")

    width = ctx.real(_MU_BISECTION_WIDTH)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if li_pv(mid, ctx) < 0:
            lo = mid
        else:
            hi = mid

    target = mp.mpf(10) ** (-(digits + 2))
    x = (lo + hi) / 2
    for _ in range(_MU_NEWTON_MAX_ITER):
        residual = li_pv(x, ctx)
        if abs(residual) < target:
            return ConstantResult(x, digits, 'bisection-newton', ctx.precision)
        # li'(x) = 1/ln x
        x = x - residual * mp.ln(x)
    raise ConvergenceError(f"μ Newton 반복이 {_MU_NEWTON_MAX_ITER}회 안에 수렴하지 않았습니다")
