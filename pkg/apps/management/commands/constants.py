"""
상수 γ, μ 관리 명령어: 계산값과 역사적 인쇄값(맞는 자릿수) 비교.

--digits 는 precision - guard 로 제한하고, 상수별 상한(GAMMA_DIGITS_MAX / MU_DIGITS_MAX)을 넘으면
경고 후 상한으로 맞춘다.

사용법:
    python manage.py constants --digits 30
    python manage.py constants --digits 70 --precision 100
"""
import logging

from apps.management.commands._base import LogintCommand
from apps.service.constants import (
    MASCHERONI_GAMMA,
    SOLDNER_GAMMA,
    SOLDNER_MU,
    euler_gamma,
    gamma_digits_max,
    mu_digits_max,
    soldner_mu,
)
from apps.utils.digits import matching_decimals

logger = logging.getLogger(__name__)

# (이름, 출처, 인쇄값)
HISTORICAL = (
    ('gamma', 'mascheroni', MASCHERONI_GAMMA),
    ('gamma', 'soldner', SOLDNER_GAMMA),
    ('mu', 'soldner', SOLDNER_MU),
)

CALCULATORS = {'gamma': (euler_gamma, gamma_digits_max), 'mu': (soldner_mu, mu_digits_max)}


def _capped(name: str, digits: int) -> int:
    cap = CALCULATORS[name][1]()
    if digits > cap:
        logger.warning("%s 요청 자릿수 %s 가 상한 %s 를 넘어 %s 자리로 제한합니다", name, digits, cap, cap)
        return cap
    return digits


class Command(LogintCommand):
    help = 'γ 와 μ 를 --digits 자리까지 계산하고 인쇄된 역사값이 몇 자리까지 맞는지 출력합니다.'

    def handle(self, *args, **options):
        ctx = self.context(options)
        digits = self.digits(options, ctx)
        computed = {name: calc(_capped(name, digits)) for name, (calc, _) in CALCULATORS.items()}
        rows = [[name, 'computed', result.method_tag, result.digit_string(), '']
                for name, result in computed.items()]
        for name, source, printed in HISTORICAL:
            # 인쇄값보다 긴 자릿수로 비교해야 마지막 자리까지 판정된다
            reference = computed[name]
            needed = len(printed.split('.', 1)[-1]) + 2
            if needed > reference.digits_requested:
                reference = CALCULATORS[name][0](needed)
            matched = matching_decimals(reference.digit_string(), printed)
            rows.append([name, source, 'printed', printed, matched])
        self.emit_table(['constant', 'source', 'method', 'value', 'correct_decimals'], rows, options)
