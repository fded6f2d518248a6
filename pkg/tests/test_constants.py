"""
상수 γ, μ 회귀 테스트.

기대값 출처:
- γ: Soldner 가 인쇄한 22자리 0.5772156649015328606065, Mascheroni 문자열은 19자리까지 맞음
- μ: 1.4513692348833... (li 근), Soldner 인쇄값 1.4513692346 은 9자리까지 맞음
- mpmath.euler 를 독립 오라클로 사용
"""
import mpmath
import pytest
from django.test import override_settings

from apps.exceptions import ConvergenceError, DomainError, PrecisionOverflowError
from apps.service.constants import (
    MASCHERONI_GAMMA,
    SOLDNER_GAMMA,
    SOLDNER_MU,
    euler_gamma,
    gamma_value,
    harmonic_gamma_limit,
    soldner_mu,
)
from apps.service.lifn import li_pv
from apps.service.realnum import get_context
from apps.utils.digits import matching_decimals


# ── γ ────────────────────────────────────────────────────
class TestEulerGamma:
    def test_soldner_22_digits(self):
        result = euler_gamma(22)
        assert result.digit_string() == '0.5772156649015328606065'
        assert result.method_tag == 'euler-maclaurin'
        assert result.digits_requested == 22

    def test_mascheroni_correct_through_19(self):
        computed = euler_gamma(40).digit_string()
        assert matching_decimals(computed, MASCHERONI_GAMMA) == 19

    def test_soldner_string_fully_correct(self):
        assert matching_decimals(euler_gamma(30).digit_string(), SOLDNER_GAMMA) == 22

    def test_prefix_consistent(self):
        assert euler_gamma(40).digit_string().startswith(euler_gamma(22).digit_string())

    def test_against_mpmath_oracle(self):
        with mpmath.workdps(110):
            oracle = +mpmath.euler
            assert abs(euler_gamma(100).value - oracle) < mpmath.mpf(10) ** -100

    def test_gamma_value_per_context(self):
        assert abs(gamma_value(get_context(30)) - mpmath.euler) < mpmath.mpf(10) ** -15

    def test_digit_cap(self):
        with pytest.raises(PrecisionOverflowError):
            euler_gamma(101)

    @override_settings(LOGINT={'GAMMA_DIGITS_MAX': 20})
    def test_digit_cap_from_settings(self):
        with pytest.raises(PrecisionOverflowError):
            euler_gamma(22)

    def test_zero_digits(self):
        with pytest.raises(DomainError):
            euler_gamma(0)


# ── H_N - ln N ───────────────────────────────────────────
class TestHarmonicLimit:
    def test_n1(self):
        assert harmonic_gamma_limit(1) == 1

    def test_n_1e4_above_gamma(self):
        delta = harmonic_gamma_limit(10 ** 4) - gamma_value()
        assert 0 < delta < mpmath.mpf('1e-4')

    def test_n_1e6_close(self):
        assert abs(harmonic_gamma_limit(10 ** 6) - gamma_value()) < mpmath.mpf('1e-6')

    def test_decreasing_towards_gamma(self):
        gaps = [harmonic_gamma_limit(10 ** k) - gamma_value() for k in range(2, 6)]
        assert all(g > 0 for g in gaps)
        assert gaps == sorted(gaps, reverse=True)

    def test_domain(self):
        with pytest.raises(DomainError):
            harmonic_gamma_limit(0)


# ── μ ───────────────────────────────────────────────────
class TestSoldnerMu:
    def test_13_digits(self):
        result = soldner_mu(13)
        assert result.digit_string() == '1.4513692348833'
        assert result.method_tag == 'bisection-newton'

    def test_soldner_printed_correct_through_9(self):
        assert matching_decimals(soldner_mu(15).digit_string(), SOLDNER_MU) == 9

    def test_root_residual(self):
        result = soldner_mu(20)
        assert abs(li_pv(result.value)) < mpmath.mpf(10) ** -22

    def test_digit_cap(self):
        with pytest.raises(PrecisionOverflowError):
            soldner_mu(51)

    def test_bracket_failure(self, monkeypatch):
        monkeypatch.setattr('apps.service.constants._MU_BRACKET', ('2', '3'))
        with pytest.raises(ConvergenceError):
            soldner_mu(10)
