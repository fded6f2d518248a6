"""
복소 지수적분과 e^z/z 경로적분

- ei_complex(z): γ + Log z + Σ z^k/(k·k!), 주 분지 Im Log ∈ (-π, π]
- contour_integral_exp_over_z(path): 꺾은선 각 선분에 16점 Gauss-Legendre, 패널을 2배씩 늘려 수렴 확인
- winding_offset(path): 음의 실수축을 가로지른 횟수(부호 포함). 경로적분 = Ei(z) - Ei(1) + 2πi·w
- Si/Ci 테일러 급수와 sin/cos 적분 항등식 점검

분지 효과는 모두 2πi·w 항으로 드러나므로 주값 Ei 와 직접 비교할 수 있다.
"""
import logging
import math
import random
from typing import NamedTuple

from apps.exceptions import ConvergenceError, DomainError, PoleProximityError
from apps.models import Polyline
from apps.service.constants import gamma_value
from apps.service.quadrature import apply_rule, legendre_rule
from apps.service.realnum import RealContext, get_context, logint_setting, with_guard

logger = logging.getLogger(__name__)

POLE_CLEARANCE = 1e-6
CONTOUR_ORDER = 16
_LOG10_E = math.log10(math.e)


class Art18Residuals(NamedTuple):
    ci_residual: object
    si_residual: object


def _as_mpc(z, ctx: RealContext):
    if isinstance(z, str):
        z = complex(z.replace(' ', ''))
    return ctx.mp.mpc(z)


def _series_guard(magnitude: float) -> int:
    """|z| > 1 에서 상쇄로 잃는 자릿수"""
    if magnitude <= 1:
        return 0
    return math.ceil(2 * magnitude * _LOG10_E) + 2


def ei_complex(z, ctx: RealContext | None = None):
    """
    복소 Ei(z), z ≠ 0 (주 분지)

    양의 실수축에서는 실수 ei() 와 같은 값(허수부 0)을 준다.
    """
    ctx = ctx or get_context()
    z = _as_mpc(z, ctx)
    if z == 0:
        raise DomainError("Ei(0) 은 정의되지 않습니다")
    work = with_guard(ctx, _series_guard(float(abs(z))))
    mp = work.mp
    z = mp.mpc(z)
    tol = work.tolerance(4)
    power_over_factorial = mp.mpc(1)
    total = mp.mpc(0)
    abs_total = mp.mpf(0)
    small_run = 0
    k = 0
    max_terms = 100 + 4 * work.precision + int(4 * abs(z))
    while small_run < 3:
        k += 1
        if k > max_terms:
            raise ConvergenceError(f"복소 Ei 급수가 {max_terms}항 안에 수렴하지 않았습니다")
        power_over_factorial = power_over_factorial * z / k
        term = power_over_factorial / k
        total += term
        abs_total += abs(term)
        small_run = small_run + 1 if abs(term) < tol * abs_total else 0
    return ctx.mp.mpc(gamma_value(work) + mp.log(z) + total)


def _segment_distance_to_origin(a: complex, b: complex) -> float:
    d = b - a
    length2 = d.real * d.real + d.imag * d.imag
    if length2 == 0:
        return abs(a)
    t = -(a.real * d.real + a.imag * d.imag) / length2
    t = min(1.0, max(0.0, t))
    return abs(a + t * d)


def validate_polyline(path: Polyline) -> None:
    """꼭짓점/선분이 원점에서 10^-6 이내면 PoleProximityError"""
    if not path.vertices:
        raise DomainError("경로에 꼭짓점이 없습니다")
    for vertex in path.vertices:
        if abs(complex(vertex)) < POLE_CLEARANCE:
            raise PoleProximityError(f"꼭짓점 {vertex} 가 원점에 너무 가깝습니다")
    for a, b in path.segments():
        distance = _segment_distance_to_origin(complex(a), complex(b))
        if distance < POLE_CLEARANCE:
            raise PoleProximityError(f"선분 {a} → {b} 가 원점에서 {distance:.2e} 거리를 지납니다")


def _segment_integral(a, b, rule, ctx: RealContext, tolerance, max_panels: int):
    mp = ctx.mp
    direction = b - a

    def integrand(t):
        z = a + direction * t
        return mp.exp(z) / z * direction

    zero, one = mp.mpf(0), mp.mpf(1)
    panels = 1
    previous = apply_rule(integrand, zero, one, rule, panels, ctx)
    while panels < max_panels:
        panels *= 2
        current = apply_rule(integrand, zero, one, rule, panels, ctx)
        if abs(current - previous) < tolerance:
            return current
        previous = current
    raise ConvergenceError(f"선분 {mp.nstr(a, 6)} → {mp.nstr(b, 6)} 적분이 {max_panels} 패널 안에 수렴하지 않았습니다")


def contour_integral_exp_over_z(path: Polyline, ctx: RealContext | None = None):
    """
    꺾은선 경로를 따라 ∫ e^z/z dz

    Args:
        path: Polyline (원점 10^-6 이내 통과 금지)
        ctx: None 이면 LOGINT['CONTOUR_PRECISION'] 자리

    Returns:
        mpc (꼭짓점 하나뿐이면 0)
    """
    validate_polyline(path)
    ctx = ctx or get_context(int(logint_setting('CONTOUR_PRECISION')))
    mp = ctx.mp
    tolerance = mp.mpf(logint_setting('CONTOUR_TOLERANCE'))
    max_panels = int(logint_setting('CONTOUR_MAX_PANELS'))
    rule = legendre_rule(CONTOUR_ORDER, ctx)

    pieces = []
    for a, b in path.segments():
        a, b = _as_mpc(a, ctx), _as_mpc(b, ctx)
        if a == b:
            continue
        pieces.append(_segment_integral(a, b, rule, ctx, tolerance, max_panels))
    if not pieces:
        return mp.mpc(0)
    return mp.fsum(pieces)


def winding_offset(path: Polyline) -> int:
    """
    경로가 음의 실수축을 지난 부호 있는 횟수

    윗반평면(Im ≥ 0) → 아랫반평면: +1, 반대: -1. 연속 로그와 주 분지 로그의 차이가 2πi·w 이다.
    """
    w = 0
    for a, b in path.segments():
        a, b = complex(a), complex(b)
        a_upper, b_upper = a.imag >= 0, b.imag >= 0
        if a_upper == b_upper:
            continue
        t = a.imag / (a.imag - b.imag)
        crossing = a.real + t * (b.real - a.real)
        if crossing < 0:
            w += 1 if a_upper else -1
    return w


def fundamental_theorem_residual(path: Polyline, ctx: RealContext | None = None):
    """|∫_path e^z/z dz - (Ei(z_end) - Ei(z_start) + 2πi·w)|"""
    ctx = ctx or get_context(int(logint_setting('CONTOUR_PRECISION')))
    mp = ctx.mp
    start, end = path.vertices[0], path.vertices[-1]
    integral = contour_integral_exp_over_z(path, ctx)
    expected = ei_complex(end, ctx) - ei_complex(start, ctx) + 2 * mp.pi * mp.j * winding_offset(path)
    return abs(integral - expected)


def si_taylor(x, ctx: RealContext | None = None):
    """Si(x) = Σ (-1)^k x^(2k+1) / ((2k+1)·(2k+1)!)"""
    ctx = ctx or get_context()
    work = with_guard(ctx, _series_guard(float(abs(ctx.real(x)))))
    x = work.real(x)
    tol = work.tolerance(4)
    term = x  # (-1)^k x^(2k+1) / (2k+1)!
    total = term
    k = 0
    while abs(term) > tol * max(abs(total), 1):
        k += 1
        term = -term * x * x / ((2 * k) * (2 * k + 1))
        total += term / (2 * k + 1)
    return ctx.real(total)


def ci_taylor(x, ctx: RealContext | None = None):
    """Ci(x) = γ + ln x + Σ_{k≥1} (-1)^k x^(2k) / (2k·(2k)!), x > 0"""
    ctx = ctx or get_context()
    if ctx.real(x) <= 0:
        raise DomainError("ci_taylor 는 x > 0 이어야 합니다")
    work = with_guard(ctx, _series_guard(float(ctx.real(x))))
    mp = work.mp
    x = work.real(x)
    tol = work.tolerance(4)
    term = mp.mpf(1)  # (-1)^k x^(2k) / (2k)!
    total = mp.mpf(0)
    k = 0
    while True:
        k += 1
        term = -term * x * x / ((2 * k - 1) * (2 * k))
        total += term / (2 * k)
        if abs(term) <= tol * max(abs(total), 1):
            break
    return ctx.real(gamma_value(work) + mp.ln(x) + total)


def _ei_pair(x, ctx: RealContext):
    mp = ctx.mp
    x = ctx.real(x)
    if x <= 0:
        raise DomainError("x > 0 이어야 합니다")
    return x, ei_complex(mp.mpc(0, x), ctx), ei_complex(mp.mpc(0, -x), ctx)


def bessel_art18_check(x, ctx: RealContext | None = None) -> Art18Residuals:
    """
    (Ei(ix) + Ei(-ix))/2 = Ci(x),  (Ei(ix) - Ei(-ix))/(2i) = Si(x) + π/2

    li(e^{±ix}) 를 Ei(±ix) 로 읽고, Si/Ci 는 테일러 급수 값과 비교한 잔차를 돌려준다.
    """
    ctx = ctx or get_context()
    mp = ctx.mp
    x, plus, minus = _ei_pair(x, ctx)
    cosine_part = (plus + minus) / 2
    sine_part = (plus - minus) / (2 * mp.j)
    ci_residual = abs(cosine_part - ci_taylor(x, ctx))
    si_residual = abs(sine_part - (si_taylor(x, ctx) + mp.pi / 2))
    return Art18Residuals(ci_residual=ci_residual, si_residual=si_residual)


def bessel_art18_printed_residual(x, ctx: RealContext | None = None):
    """인쇄된 형태 (Ei(ix) - Ei(-ix))/(2ix) 를 Si(x) 와 비교한 잔차 (참고용, 0 이 아님)"""
    ctx = ctx or get_context()
    mp = ctx.mp
    x, plus, minus = _ei_pair(x, ctx)
    return abs((plus - minus) / (2 * mp.j * x) - si_taylor(x, ctx))


def unit_square_loop() -> Polyline:
    """1 에서 시작해 원점을 반시계 방향으로 한 바퀴 도는 정사각형"""
    return Polyline.of(1, 1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j, 1)


def random_homotopic_pairs(count: int = 20, seed: int = 0, end: complex = 3 + 4j) -> list[tuple[Polyline, Polyline]]:
    """
    1 → end 를 잇는 꺾은선 쌍. 중간 꼭짓점은 Re ∈ [0.5, 4], Im ∈ [-4, 4] (볼록 영역, 원점 제외)이라
    두 경로는 극을 사이에 두지 않는다.
    """
    if end.real < 0.5:
        raise DomainError("끝점은 오른쪽 반평면(Re ≥ 0.5)에 있어야 합니다")
    rng = random.Random(seed)

    def random_path():
        middle = [complex(rng.uniform(0.5, 4.0), rng.uniform(-4.0, 4.0)) for _ in range(rng.randint(1, 4))]
        return Polyline.of(1, *middle, end)

    return [(random_path(), random_path()) for _ in range(count)]
