"""
Gauss-Legendre 구적법

노드: n 차 Legendre 다항식 P_n 의 근. 초기값 cos(π(i - 1/4)/(n + 1/2)) 에서 Newton 반복,
허용오차 10^(-precision+4). P_n, P_n' 는 3항 점화식으로 계산.
가중치: w_i = 2 / ((1 - x_i^2) · P_n'(x_i)^2)

노드는 0 에 대해 대칭이므로 양수 쪽 절반만 구하고 거울상으로 채운다.
"""
import logging
from functools import lru_cache

from apps.exceptions import ConvergenceError, DomainError
from apps.models import QuadratureRule
from apps.service.realnum import RealContext, get_context

logger = logging.getLogger(__name__)

MAX_ORDER = 40
_NEWTON_MAX_ITER = 100
GAUSS_1815_ORDERS = (4, 7, 10, 16)
GAUSS_1815_INTERVAL = (100000, 200000)


def _legendre_with_derivative(n: int, x, mp):
    """(P_n(x), P_n'(x))"""
    p_prev, p = mp.mpf(1), x
    for k in range(2, n + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    if n == 0:
        return mp.mpf(1), mp.mpf(0)
    if n == 1:
        return x, mp.mpf(1)
    derivative = n * (x * p - p_prev) / (x * x - 1)
    return p, derivative


@lru_cache(maxsize=None)
def _rule_at(n: int, precision: int) -> QuadratureRule:
    ctx = get_context(precision)
    mp = ctx.mp
    tol = mp.mpf(10) ** (-(precision - 4))
    positive: list[tuple] = []
    for i in range(1, n // 2 + 1):
        x = mp.cos(mp.pi * (i - mp.mpf('0.25')) / (n + mp.mpf('0.5')))
        for iteration in range(_NEWTON_MAX_ITER):
            p, dp = _legendre_with_derivative(n, x, mp)
            step = p / dp
            x -= step
            if abs(step) <= tol:
                break
        else:
            raise ConvergenceError(f"Legendre 근 Newton 반복이 수렴하지 않았습니다 (n={n}, i={i})")
        _, dp = _legendre_with_derivative(n, x, mp)
        positive.append((x, 2 / ((1 - x * x) * dp * dp)))

    # 홀수 차수의 가운데 노드 0: P_n'(0) 로 가중치 계산
    middle = []
    if n % 2 == 1:
        zero = mp.mpf(0)
        if n == 1:
            middle = [(zero, mp.mpf(2))]
        else:
            _, dp = _legendre_with_derivative(n, zero, mp)
            middle = [(zero, 2 / (dp * dp))]

    # positive 는 큰 노드부터 (i=1 이 1 에 가장 가까움)
    ascending = [(-x, w) for x, w in positive] + middle + [(x, w) for x, w in reversed(positive)]
    return QuadratureRule(
        order=n,
        nodes=tuple(x for x, _ in ascending),
        weights=tuple(w for _, w in ascending),
        precision=precision,
    )


def legendre_rule(n: int, ctx: RealContext | None = None) -> QuadratureRule:
    """
    n 점 Gauss-Legendre 규칙 ([-1, 1])

    Args:
        n: 1 ≤ n ≤ 40

    Returns:
        QuadratureRule (노드 오름차순, 정밀도별 캐시)
    """
    if not 1 <= n <= MAX_ORDER:
        raise DomainError(f"규칙 차수는 1..{MAX_ORDER} 이어야 합니다: {n}")
    ctx = ctx or get_context()
    return _rule_at(n, ctx.precision)


def apply_rule(f, a, b, rule: QuadratureRule, panels: int, ctx: RealContext):
    """[a, b] 를 panels 개 등분해 각 패널에 rule 적용. 패널 순서대로 합산"""
    mp = ctx.mp
    width = (b - a) / panels
    half = width / 2
    panel_sums = []
    for j in range(panels):
        center = a + width * j + half
        panel_sums.append(half * mp.fsum(w * f(center + half * x) for x, w in zip(rule.nodes, rule.weights)))
    return mp.fsum(panel_sums)


def integrate_recip_log(a, b, rule: QuadratureRule, panels: int = 1, ctx: RealContext | None = None):
    """
    ∫_a^b dt/ln t 복합 Gauss-Legendre

    Args:
        a, b: 1 < a ≤ b
        rule: legendre_rule(n)
        panels: 등분 패널 수 (≥ 1)
    """
    ctx = ctx or get_context(rule.precision)
    a, b = ctx.real(a), ctx.real(b)
    if panels < 1:
        raise DomainError(f"패널 수는 1 이상이어야 합니다: {panels}")
    if b < a:
        raise DomainError("integrate_recip_log 는 a ≤ b 이어야 합니다")
    if a <= 1:
        raise DomainError("적분 구간이 t=1 (1/ln t 의 특이점) 을 포함합니다")
    if a == b:
        return ctx.mp.mpf(0)
    ln = ctx.mp.ln
    return apply_rule(lambda t: 1 / ln(t), a, b, rule, panels, ctx)


def gauss_1815_demo(orders=GAUSS_1815_ORDERS, panels: int = 1, ctx: RealContext | None = None) -> list[dict]:
    """
    ∫_{100000}^{200000} dt/ln t 를 n 점 규칙으로 계산해 li_delta 기준값과 비교

    Returns:
        [{'nodes', 'value', 'reference', 'abs_error', 'rel_error'}, ...] (orders 순서)
    """
    from apps.service.lifn import li_delta

    ctx = ctx or get_context()
    a, b = GAUSS_1815_INTERVAL
    reference = li_delta(a, b, ctx)
    rows = []
    for n in orders:
        value = integrate_recip_log(a, b, legendre_rule(n, ctx), panels, ctx)
        abs_error = abs(value - reference)
        rows.append({
            'nodes': n,
            'value': value,
            'reference': reference,
            'abs_error': abs_error,
            'rel_error': abs_error / abs(reference),
        })
        logger.info("Gauss 구적 n=%s: 상대오차 %s", n, ctx.mp.nstr(abs_error / abs(reference), 3))
    return rows
