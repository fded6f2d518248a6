"""
li(x), Ei(y) 기준 계산기 (Euler 급수)

    Ei(y) = γ + ln|y| + Σ_{k≥1} y^k / (k·k!)
    li(x) = Ei(ln x)              (PV_FROM_ZERO, 0 부터의 주값)
    li(x) - li(2) = ∫_2^x dt/ln t  (FROM_TWO)

급수는 t=1 (y=0) 의 주값을 자동으로 실현한다. 역사적 점화식/구적법은 모두 이 모듈 값과 비교해 검증한다.

절단 규칙: 연속 3개 항의 크기가 10^(-precision-4) × (항 크기 누적합) 미만이면 멈춘다.
부호가 번갈아 상쇄되는 누적합이 아니라 크기 누적합을 기준으로 하므로 음의 y 에서 조기 종료하지 않는다.
음의 y 는 중간 항이 e^|y| 규모로 커졌다가 상쇄되므로 그만큼 작업 정밀도를 자동으로 올린다.
"""
import logging
import math
from functools import lru_cache

from apps.exceptions import ConvergenceError, DomainError
from apps.models import LiConvention
from apps.service.constants import gamma_value
from apps.service.realnum import RealContext, get_context, with_guard

logger = logging.getLogger(__name__)

_LOG10_E = math.log10(math.e)


def _ei_series(y, ctx: RealContext):
    mp = ctx.mp
    tol = ctx.tolerance(4)
    power_over_factorial = mp.mpf(1)  # y^k / k!
    total = mp.mpf(0)
    abs_total = mp.mpf(0)
    small_run = 0
    k = 0
    max_terms = 100 + 4 * ctx.precision + int(4 * abs(y))
    while small_run < 3:
        k += 1
        if k > max_terms:
            raise ConvergenceError(f"Ei 급수가 {max_terms}항 안에 수렴하지 않았습니다 (y={mp.nstr(y, 10)})")
        power_over_factorial = power_over_factorial * y / k
        term = power_over_factorial / k
        total += term
        abs_total += abs(term)
        small_run = small_run + 1 if abs(term) < tol * abs_total else 0
    return gamma_value(ctx) + mp.ln(abs(y)) + total


def _escalation_digits(y, ctx: RealContext) -> int:
    """음의 y 에서 상쇄로 잃는 자릿수 (약 2|y|·log10 e)"""
    magnitude = float(abs(y))
    if y > 0 or magnitude <= 1:
        return 0
    lost = math.ceil(2 * magnitude * _LOG10_E) + 2
    if magnitude > ctx.precision / 2:
        logger.info("Ei(y): |y|=%.1f 로 작업 정밀도를 %s 자리 올립니다", magnitude, lost)
    return lost


def ei(y, ctx: RealContext | None = None):
    """
    지수적분 Ei(y) (y ≠ 0, 주값)

    Args:
        y: 실수 (int/str/mpf)
        ctx: 계산 컨텍스트 (None 이면 기본 정밀도)

    Returns:
        ctx 정밀도의 mpf
    """
    ctx = ctx or get_context()
    y = ctx.real(y)
    if y == 0:
        raise DomainError("Ei(0) 은 정의되지 않습니다 (로그 특이점)")
    work = with_guard(ctx, _escalation_digits(y, ctx))
    return ctx.real(_ei_series(work.real(y), work))


def li_pv(x, ctx: RealContext | None = None):
    """li(x) = Ei(ln x), 0 부터의 주값 적분. x > 0, x ≠ 1"""
    ctx = ctx or get_context()
    x = ctx.real(x)
    if x <= 0:
        raise DomainError(f"li 정의역 오류: x={ctx.mp.nstr(x, 15)} (x > 0 이어야 함)")
    if x == 1:
        raise DomainError("li(1) 은 발산합니다 (t=1 특이점)")
    return ei(ctx.mp.ln(x), ctx)


@lru_cache(maxsize=None)
def _li_two(precision: int):
    return li_pv(2, get_context(precision))


def li(x, conv: LiConvention = LiConvention.PV_FROM_ZERO, ctx: RealContext | None = None):
    """
    로그 적분

    Args:
        x: PV_FROM_ZERO 는 x > 0, x ≠ 1 / FROM_TWO 는 x ≥ 2
        conv: LiConvention

    Returns:
        PV_FROM_ZERO: li(x), FROM_TWO: li(x) - li(2)
    """
    ctx = ctx or get_context()
    conv = LiConvention(conv)
    if conv is LiConvention.FROM_TWO:
        x = ctx.real(x)
        if x < 2:
            raise DomainError("FROM_TWO 규약은 x ≥ 2 에서만 정의됩니다")
        return li_pv(x, ctx) - _li_two(ctx.precision)
    return li_pv(x, ctx)


def li_delta(a, b, ctx: RealContext | None = None):
    """li(b) - li(a) (1 < a ≤ b)"""
    ctx = ctx or get_context()
    a, b = ctx.real(a), ctx.real(b)
    if a <= 1:
        raise DomainError("li_delta 는 a > 1 이어야 합니다 (구간이 t=1 을 포함)")
    if b < a:
        raise DomainError("li_delta 는 a ≤ b 이어야 합니다")
    if a == b:
        return ctx.mp.mpf(0)
    return li_pv(b, ctx) - li_pv(a, ctx)


def li_from_mu(x, ctx: RealContext | None = None):
    """
    li(x) = ∫_μ^x dt/ln t (x > 1) 를 Gauss-Legendre 복합 구적으로 직접 적분.
    μ 에서 시작하면 주값 없이 li 를 얻는다. x < μ 이면 음수.
    """
    from apps.service.constants import soldner_mu
    from apps.service.quadrature import integrate_recip_log, legendre_rule

    ctx = ctx or get_context()
    x = ctx.real(x)
    if x <= 1:
        raise DomainError("li_from_mu 는 x > 1 에서만 정의됩니다")
    mu = ctx.real(soldner_mu(min(40, ctx.precision - 10)).value)
    if x == mu:
        return ctx.mp.mpf(0)
    lo, hi, sign = (mu, x, 1) if x > mu else (x, mu, -1)

    rule = legendre_rule(20, ctx)
    tol = ctx.mp.mpf(10) ** (-(ctx.precision // 2))
    panels = 1
    previous = integrate_recip_log(lo, hi, rule, panels, ctx)
    while panels < 4096:
        panels *= 2
        current = integrate_recip_log(lo, hi, rule, panels, ctx)
        if abs(current - previous) <= tol * abs(current):
            return sign * current
        previous = current
    raise ConvergenceError("li_from_mu 패널 분할이 수렴하지 않았습니다")
