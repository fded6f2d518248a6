"""
역사적 li 표 작성법: Soldner 의 덧셈 점화식과 Bessel 의 곱셈 점화식

Soldner (기준점 a, 증분 x, ℓ = ln a, y = ln(1 + x/a)):
    li(a+x) = li(a) + x/ℓ + Σ_{m≥2} (-1)^(m-1)·(m-1)·a·A^(m)·y^m / (m!·ℓ^m)
    A'' = 1,  A^(m+1) = (m-1)·A^(m) + (-1)^(m+1)·ℓ^(m-1)
    (A''' = A'' - ℓ, A'''' = 2A''' + ℓ^2, A^(5) = 3A'''' - ℓ^3, ...)

Bessel (비율 a > 1, L = ln x):
    li(x/a) = li(x) + x·Σ_{k≥1} A^(k) / L^k
    A' = 1/a - 1,  A^(k+1) = k·A^(k) + (ln a)^k / a
    A^(k) = -∫_0^{ln a} u^(k-1) e^(-u) du 이므로 |A^(k+1)| ≤ ln a·|A^(k)|, 급수는 비율 ln a / L 로 수렴.
    a = 10, x = 10^n 이면 li(10^n) = li(10^(n-1)) - Σ A^(k)/(ln 10)^k · 10^n/n^k

두 점화식 모두 lifn 기준값과 비교해 부호 규칙을 검증했다 (VALIDATION.md).
오차 추정: 생략한 꼬리(첫 생략항 기준 등비 상한) + 반올림 하한.
"""
import logging
import math

from apps.exceptions import DomainError, StepTooLargeError
from apps.models import BesselCoeffs, LiTable, LiTableRow, SoldnerCoeffs, StepResult
from apps.service.lifn import li_pv
from apps.service.realnum import RealContext, get_context, with_guard

logger = logging.getLogger(__name__)

SOLDNER_MAX_STEP_RATIO = '0.5'
SOLDNER_DEFAULT_MAX_TERMS = 400
BESSEL_DEFAULT_MAX_TERMS = 400
SOLDNER_TABLE_MAX_X = 10 ** 4

# Bessel 1810 표 인쇄값: x → (li, 소수 개수(1 포함), 초과)
BESSEL_1810_PRINTED = (
    (1000, '177.609655', 169, '8.61'),
    (10000, '1246.137247', 1230, '16.14'),
    (100000, '9629.809041', 9593, '36.81'),
    (200000, '18036.052159', 17983, '53.05'),
    (300000, '26080.215589', 25997, '83.21'),
    (400000, '33922.621995', 33859, '63.62'),
    (1000000, '78627.549277', None, None),
)
# 10^5 이후 행: (x, 기준 행 x', 비율 a = x/x')
_BESSEL_RATIO_ROWS = ((200000, 100000, 2), (300000, 100000, 3), (400000, 200000, 2))


# ── Soldner ─────────────────────────────────────────────

def soldner_coeffs(a, count: int, ctx: RealContext | None = None) -> SoldnerCoeffs:
    """A'', A''', ... 처음 count 개"""
    if count < 1:
        raise DomainError("계수 개수는 1 이상이어야 합니다")
    ctx = ctx or get_context()
    a = ctx.real(a)
    if a <= 1:
        raise DomainError("Soldner 기준점은 a > 1 이어야 합니다")
    ell = ctx.mp.ln(a)
    coeffs = [ctx.mp.mpf(1)]
    for m in range(2, count + 1):
        # coeffs[-1] = A^(m), 다음 = A^(m+1)
        sign = 1 if (m + 1) % 2 == 0 else -1
        coeffs.append((m - 1) * coeffs[-1] + sign * ell ** (m - 1))
    return SoldnerCoeffs(a=a, coeffs=tuple(coeffs))


def _soldner_terms(a, x, max_terms: int, ctx: RealContext):
    """x/ℓ 와 m = 2.. 항을 차례로 생성. 계수는 점화식으로 즉석 계산"""
    mp = ctx.mp
    ell = mp.ln(a)
    y = mp.ln(1 + x / a)
    yield x / ell
    coeff = mp.mpf(1)  # A''
    factorial = mp.mpf(2)
    for m in range(2, max_terms + 1):
        sign = -1 if m % 2 == 0 else 1  # (-1)^(m-1)
        yield sign * (m - 1) * a * coeff * y ** m / (factorial * ell ** m)
        coeff = (m - 1) * coeff + (1 if (m + 1) % 2 == 0 else -1) * ell ** (m - 1)
        factorial *= m + 1


def soldner_step(li_a, a, x, max_terms: int = 12, ctx: RealContext | None = None) -> StepResult:
    """
    li(a+x) = li(a) + Soldner 급수

    Args:
        li_a: li(a)
        a: 기준점 (> 1)
        x: 증분 (0 ≤ x, x/a ≤ 0.5)
        max_terms: x/ℓ 항 포함 최대 항 수 (≥ 2)

    Returns:
        StepResult(value=li(a+x), error_estimate, terms_used)
    """
    ctx = ctx or get_context()
    mp = ctx.mp
    li_a, a, x = ctx.real(li_a), ctx.real(a), ctx.real(x)
    if a <= 1:
        raise DomainError("Soldner 기준점은 a > 1 이어야 합니다")
    if x < 0:
        raise DomainError("Soldner 증분은 x ≥ 0 이어야 합니다")
    if max_terms < 2:
        raise DomainError("max_terms 는 2 이상이어야 합니다")
    if x / a - ctx.real(SOLDNER_MAX_STEP_RATIO) > ctx.tolerance():
        raise StepTooLargeError(f"Soldner 단계 폭 x/a = {mp.nstr(x / a, 6)} > 0.5")
    if x == 0:
        return StepResult(value=li_a, error_estimate=mp.mpf(0), terms_used=0)

    ratio = mp.ln(1 + x / a) / mp.ln(a)  # y/ℓ: 뒤쪽 항 사이의 비율
    converging = ratio < 1
    if not converging:
        logger.warning("Soldner 급수 비율 y/ℓ=%s ≥ 1: 가장 작은 항에서 멈춥니다", mp.nstr(ratio, 4))
    tol = ctx.tolerance(2)
    terms = _soldner_terms(a, x, max_terms + 2, ctx)
    total = mp.mpf(0)
    used = 0
    previous = None
    pending = []
    for term in terms:
        magnitude = abs(term)
        if used >= max_terms:
            pending.append(term)
            break
        if not converging and previous is not None and magnitude > previous:
            pending.append(term)
            break
        total += term
        used += 1
        previous = magnitude
        if used >= 2 and magnitude <= tol * abs(total):
            break
    # 첫 생략항과 그 다음 항
    omitted = pending + [t for _, t in zip(range(2 - len(pending)), terms)]
    tail = sum((abs(t) for t in omitted), mp.mpf(0))
    if converging:
        tail = tail / (1 - ratio)
    if used >= max_terms and tail > tol * abs(total):
        logger.info("Soldner 단계가 %s항에서 잘렸습니다 (꼬리 추정 %s)", used, mp.nstr(tail, 3))
    value = li_a + total
    return StepResult(value=value, error_estimate=tail + ctx.rounding_floor(value), terms_used=used)


def unit_schedule(x_max: int, start: int = 2) -> list[int]:
    """start, start+1, ..., x_max (정수 단위 단계)"""
    return list(range(start, int(x_max) + 1))


def geometric_schedule(x_max, ratio='1.5', start: int = 2, ctx: RealContext | None = None) -> list:
    """start 에서 ratio 배씩 (x/a ≤ 0.5 를 지키는 가장 큰 폭), 마지막은 x_max"""
    ctx = ctx or get_context()
    ratio = ctx.real(ratio)
    points = [ctx.real(start)]
    x_max = ctx.real(x_max)
    while points[-1] * ratio < x_max:
        points.append(points[-1] * ratio)
    if points[-1] < x_max:
        points.append(x_max)
    return points


def soldner_table(x_max, schedule=None, max_terms: int = SOLDNER_DEFAULT_MAX_TERMS,
                  ctx: RealContext | None = None) -> LiTable:
    """
    li(2) (lifn) 에서 시작해 schedule 점마다 soldner_step 을 이어 붙인 표

    Args:
        x_max: ≤ 10^4
        schedule: 오름차순 점 목록 (첫 점 2). None 이면 unit_schedule
    """
    ctx = ctx or get_context()
    x_max = ctx.real(x_max)
    if x_max > SOLDNER_TABLE_MAX_X:
        raise DomainError(f"Soldner 표는 x ≤ {SOLDNER_TABLE_MAX_X} 까지만 만듭니다")
    if x_max < 2:
        raise DomainError("Soldner 표는 x_max ≥ 2 이어야 합니다")
    points = [ctx.real(p) for p in (schedule if schedule is not None else unit_schedule(int(x_max)))]
    if not points or points[0] != 2:
        raise DomainError("Soldner 일정은 2 에서 시작해야 합니다")

    table = LiTable('soldner')
    value = li_pv(2, ctx)
    accumulated = ctx.rounding_floor(value)
    table.add_row(LiTableRow(x=points[0], li_value=value, error_estimate=accumulated))
    for a, b in zip(points, points[1:]):
        if b > x_max:
            break
        step = soldner_step(value, a, b - a, max_terms, ctx)
        value = step.value
        accumulated += step.error_estimate
        table.add_row(LiTableRow(x=b, li_value=value, error_estimate=accumulated))
    logger.info("Soldner 표 %s행 작성 (x_max=%s)", len(table), ctx.mp.nstr(x_max, 8))
    return table


# ── Bessel ──────────────────────────────────────────────

def bessel_coeffs(a, count: int, ctx: RealContext | None = None) -> BesselCoeffs:
    """
    A', A'', ... 처음 count 개 (a > 1)

    전진 점화식은 k 단계마다 오차가 k 배로 커지므로 log10(count!) 자리를 더한 정밀도로 계산한 뒤
    ctx 정밀도로 반올림한다.
    """
    if count < 1:
        raise DomainError("계수 개수는 1 이상이어야 합니다")
    ctx = ctx or get_context()
    if ctx.real(a) <= 1:
        raise DomainError("Bessel 비율은 a > 1 이어야 합니다")
    work = with_guard(ctx, math.ceil(math.lgamma(count + 1) / math.log(10)) + 5)
    a_work = work.real(a)
    log_a = work.mp.ln(a_work)
    coeffs = [1 / a_work - 1]
    for k in range(1, count):
        coeffs.append(k * coeffs[-1] + log_a ** k / a_work)
    return BesselCoeffs(a=ctx.real(a), coeffs=tuple(ctx.real(c) for c in coeffs))


def _bessel_sum(x, coeffs: BesselCoeffs, tolerance, ctx: RealContext):
    """x·Σ A^(k)/L^k 와 (항 수, 꼬리 추정). 항이 tolerance 아래로 떨어지면 멈춤"""
    mp = ctx.mp
    big_l = mp.ln(x)
    log_a = mp.ln(coeffs.a)
    ratio = log_a / big_l  # |A^(k+1)/A^(k)| ≤ ln a 이므로 항 비율 상한
    total = mp.mpf(0)
    used = 0
    last = None
    for k, coeff in enumerate(coeffs.coeffs, start=1):
        term = x * coeff / big_l ** k
        total += term
        used = k
        last = abs(term)
        if last <= tolerance * abs(total):
            break
    if used < len(coeffs.coeffs):
        next_term = abs(x * coeffs.coeffs[used] / big_l ** (used + 1))
    else:
        next_term = last * ratio
    if ratio >= 1:
        logger.warning("Bessel 급수 비율 ln a / ln x = %s ≥ 1: 수렴하지 않습니다", mp.nstr(ratio, 4))
        tail = next_term
    else:
        tail = next_term / (1 - ratio)
    if used == len(coeffs.coeffs) and tail > tolerance * abs(total):
        logger.warning("Bessel 급수가 계수 %s개에서 잘렸습니다 (꼬리 %s 가 허용오차보다 큼)", used, mp.nstr(tail, 4))
    return total, used, tail


def bessel_ratio_step(li_lower, x, coeffs: BesselCoeffs, tolerance=None,
                      ctx: RealContext | None = None) -> StepResult:
    """
    li(x) = li(x/a) - x·Σ A^(k)/(ln x)^k

    Args:
        li_lower: li(x/a)
        x: 목표점
        coeffs: bessel_coeffs(a, count). count 가 최대 항 수
        tolerance: 상대 허용오차 (None 이면 작업 정밀도)
    """
    ctx = ctx or get_context()
    x = ctx.real(x)
    if x / coeffs.a <= 1:
        raise DomainError("Bessel 단계는 x/a > 1 이어야 합니다")
    tolerance = ctx.tolerance(2) if tolerance is None else ctx.real(tolerance)
    total, used, tail = _bessel_sum(x, coeffs, tolerance, ctx)
    value = ctx.real(li_lower) - total
    return StepResult(value=value, error_estimate=tail + ctx.rounding_floor(value), terms_used=used)


def bessel_pow10_step(li_prev, n: int, coeffs: BesselCoeffs, tolerance=None,
                      ctx: RealContext | None = None) -> StepResult:
    """
    li(10^n) = li(10^(n-1)) - Σ A^(k)/(ln 10)^k · 10^n/n^k

    Args:
        li_prev: li(10^(n-1))
        n: ≥ 2
        coeffs: a = 10 으로 만든 계수
    """
    ctx = ctx or get_context()
    if n < 2:
        raise DomainError("bessel_pow10_step 은 n ≥ 2 이어야 합니다")
    if coeffs.a != 10:
        raise DomainError("bessel_pow10_step 은 a = 10 계수가 필요합니다")
    return bessel_ratio_step(li_prev, ctx.mp.mpf(10) ** n, coeffs, tolerance, ctx)


def bessel_chain(n_max: int, ctx: RealContext | None = None) -> LiTable:
    """li(10) (lifn) 에서 10 배씩 li(10^n_max) 까지"""
    ctx = ctx or get_context()
    coeffs = bessel_coeffs(10, BESSEL_DEFAULT_MAX_TERMS, ctx)
    table = LiTable('bessel-chain')
    value = li_pv(10, ctx)
    accumulated = ctx.rounding_floor(value)
    table.add_row(LiTableRow(x=10, li_value=value, error_estimate=accumulated))
    for n in range(2, n_max + 1):
        step = bessel_pow10_step(value, n, coeffs, ctx=ctx)
        value = step.value
        accumulated += step.error_estimate
        table.add_row(LiTableRow(x=10 ** n, li_value=value, error_estimate=accumulated))
    return table


def bessel_table_1810(ctx: RealContext | None = None) -> LiTable:
    """
    Bessel 1810 표 재현: 10 의 거듭제곱 행은 bessel_chain, 2·10^5, 3·10^5, 4·10^5 는 비율 단계.
    인쇄 열(li, 소수 개수, 초과)은 역사 자료 그대로 붙인다.
    """
    ctx = ctx or get_context()
    chain = bessel_chain(6, ctx)
    computed = {int(row.x): (row.li_value, row.error_estimate) for row in chain.rows}
    for x, base, a in _BESSEL_RATIO_ROWS:
        li_base, err_base = computed[base]
        step = bessel_ratio_step(li_base, x, bessel_coeffs(a, BESSEL_DEFAULT_MAX_TERMS, ctx), ctx=ctx)
        computed[x] = (step.value, err_base + step.error_estimate)

    table = LiTable('bessel1810')
    for x, printed_li, printed_pi, printed_excess in BESSEL_1810_PRINTED:
        value, error = computed[x]
        table.add_row(LiTableRow(
            x=x,
            li_value=value,
            error_estimate=error,
            historical_li=printed_li,
            historical_pi=printed_pi,
            excess=printed_excess,
        ))
    return table


def pi_discrepancies(table: LiTable) -> list[dict]:
    """인쇄된 소수 개수(1 포함 규약)가 현대 π(x)+1 과 다른 행"""
    from apps.models import CountingConvention
    from apps.service.primes import prime_pi

    rows = []
    for row in table.rows:
        if row.historical_pi is None:
            continue
        modern = prime_pi(int(row.x), CountingConvention.BESSEL_1810)
        if modern != row.historical_pi:
            rows.append({'x': int(row.x), 'printed': row.historical_pi, 'modern': modern,
                         'difference': row.historical_pi - modern})
    return rows
