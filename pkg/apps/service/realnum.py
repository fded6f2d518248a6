"""
고정밀 실수 기반 (mpmath)

정밀도는 전역 상태가 아니라 계산별 컨텍스트(RealContext)로 전달한다.
컨텍스트는 정밀도별로 한 번 만들어 캐시하고 이후 변경하지 않으므로 스레드 간 공유해도 된다.
값(mpf)은 불변이며, 다른 컨텍스트의 mpf 와 섞어 연산해도 된다(결과는 왼쪽 피연산자의 정밀도).

정확도 계약:
- 사칙연산: 마지막 작업 자릿수 1 단위 이내 (mpmath 정확 반올림)
- ln, exp, pow, sqrt: 마지막 작업 자릿수 2 단위 이내
"""
import logging
import math
from functools import lru_cache

from django.conf import settings
from mpmath.ctx_mp import MPContext

from apps.exceptions import DomainError, RealOverflowError

logger = logging.getLogger(__name__)

_LOGINT_DEFAULTS = {
    'PRECISION': 64,
    'GUARD_DIGITS': 8,
    'MAX_DECIMAL_EXPONENT': 100000,
    'GAMMA_DIGITS_MAX': 100,
    'MU_DIGITS_MAX': 50,
    'CONTOUR_PRECISION': 30,
    'CONTOUR_TOLERANCE': 1e-12,
    'CONTOUR_MAX_PANELS': 4096,
}


def _logint_config() -> dict:
    """settings.LOGINT 를 기본값과 병합 (없는 키는 기본값)"""
    cfg = getattr(settings, 'LOGINT', None) or {}
    return {**_LOGINT_DEFAULTS, **cfg}


def logint_setting(key: str):
    return _logint_config()[key]


def default_precision() -> int:
    return int(_logint_config()['PRECISION'])


def guard_digits() -> int:
    return int(_logint_config()['GUARD_DIGITS'])


class RealContext:
    """작업 정밀도(유효 십진 자릿수)를 가진 계산 컨텍스트"""

    def __init__(self, precision: int):
        if precision < 2:
            raise DomainError(f"정밀도는 2자리 이상이어야 합니다: {precision}")
        self.precision: int = precision
        self.mp = MPContext()
        self.mp.dps = precision

    def __repr__(self):
        return f"RealContext(precision={self.precision})"

    # --- 변환 ---
    def real(self, value):
        """int/str/float/mpf → 이 컨텍스트의 mpf. 문자열은 십진 표기 그대로 해석"""
        if isinstance(value, str):
            return self.mp.mpf(value.strip())
        return self.mp.mpf(value)

    def eps(self):
        """상대 허용오차 10^(-precision)"""
        return self.mp.mpf(10) ** (-self.precision)

    def tolerance(self, extra_digits: int = 0):
        """10^(-precision - extra_digits)"""
        return self.mp.mpf(10) ** (-(self.precision + extra_digits))

    def rounding_floor(self, magnitude):
        """값 크기에 비례한 반올림 오차 하한 (누적 오차 추정에 더함)"""
        return abs(self.mp.mpf(magnitude)) * self.mp.mpf(10) ** (-(self.precision - 4))

    @property
    def pi(self):
        return +self.mp.pi

    @property
    def ln10(self):
        return +self.mp.ln10


@lru_cache(maxsize=None)
def _cached_context(precision: int) -> RealContext:
    return RealContext(precision)


def get_context(precision: int | None = None) -> RealContext:
    """정밀도별 컨텍스트 (캐시). None 이면 설정값(LOGINT_PRECISION, 기본 64)"""
    return _cached_context(int(precision) if precision else default_precision())


def with_guard(ctx: RealContext, extra_digits: int) -> RealContext:
    """ctx 보다 extra_digits 만큼 정밀한 컨텍스트"""
    return get_context(ctx.precision + max(0, int(extra_digits)))


def ln(x, ctx: RealContext | None = None):
    """자연로그. x ≤ 0 이면 DomainError"""
    ctx = ctx or get_context()
    x = ctx.real(x)
    if x <= 0:
        raise DomainError(f"ln 정의역 오류: x={ctx.mp.nstr(x, 15)} (x > 0 이어야 함)")
    return ctx.mp.ln(x)


def exp(x, ctx: RealContext | None = None):
    """지수함수. 결과가 10^MAX_DECIMAL_EXPONENT 를 넘으면 RealOverflowError"""
    ctx = ctx or get_context()
    x = ctx.real(x)
    if not ctx.mp.isfinite(x):
        raise DomainError("exp 의 인자는 유한해야 합니다")
    max_exp = int(_logint_config()['MAX_DECIMAL_EXPONENT'])
    if x > max_exp * math.log(10):
        raise RealOverflowError(f"exp overflow: 결과가 10^{max_exp} 를 넘습니다")
    return ctx.mp.exp(x)


def power(x, y, ctx: RealContext | None = None):
    """x^y (x > 0)"""
    ctx = ctx or get_context()
    x = ctx.real(x)
    if x <= 0:
        raise DomainError("power 의 밑은 양수여야 합니다")
    return ctx.mp.power(x, ctx.real(y))


def sqrt(x, ctx: RealContext | None = None):
    ctx = ctx or get_context()
    x = ctx.real(x)
    if x < 0:
        raise DomainError("sqrt 정의역 오류: x < 0")
    return ctx.mp.sqrt(x)


def clamp_digits(digits: int, ctx: RealContext | None = None) -> int:
    """출력 자릿수를 precision - guard 이하로 제한 (초과 시 경고)"""
    ctx = ctx or get_context()
    cap = ctx.precision - guard_digits()
    if digits > cap:
        logger.warning("요청 자릿수 %s 가 정밀도 %s - %s 를 넘어 %s 자리로 제한합니다",
                       digits, ctx.precision, guard_digits(), cap)
        return cap
    return max(0, digits)


def _scaled_integer(value, digits: int, mode: str) -> int:
    """value·10^digits 를 정수로 (mode: 'round' 최근접, 'trunc' 0 방향 버림)"""
    ctx = get_context(default_precision() + digits + 8).mp
    scaled = ctx.mpf(value) * ctx.mpf(10) ** digits
    if mode == 'trunc':
        return int(scaled)
    return int(ctx.nint(scaled))


def _insert_point(scaled: int, digits: int) -> str:
    sign = '-' if scaled < 0 else ''
    text = str(abs(scaled)).rjust(digits + 1, '0')
    if digits == 0:
        return sign + text
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def format_fixed(value, digits: int) -> str:
    """소수점 이하 digits 자리 고정소수점 (최근접 반올림). 천 단위 구분자 없음"""
    return _insert_point(_scaled_integer(value, digits, 'round'), digits)


def format_truncated(value, digits: int) -> str:
    """소수점 이하 digits 자리에서 잘라냄 (인쇄 자릿수 비교용)"""
    return _insert_point(_scaled_integer(value, digits, 'trunc'), digits)


def round_half_up(value) -> int:
    """표 셀 표시용 정수 반올림 (0.5 는 올림)"""
    ctx = get_context().mp
    return int(ctx.floor(ctx.mpf(value) + ctx.mpf('0.5')))
