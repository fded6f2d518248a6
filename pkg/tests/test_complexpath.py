"""
복소 Ei 와 e^z/z 경로적분 테스트.

기대값 출처:
- Ci(1) = 0.337403922900968, Si(1) = 0.946083070367183 (사인/코사인 적분 표)
- 원점을 한 바퀴 도는 닫힌 경로: 2πi (유수)
- sin/cos 적분 항등식: (Ei(ix)+Ei(-ix))/2 = Ci(x), (Ei(ix)-Ei(-ix))/(2i) = Si(x) + π/2
"""
import mpmath
import pytest

from apps.exceptions import DomainError, PoleProximityError
from apps.models import Polyline
from apps.service.complexpath import (
    bessel_art18_check,
    bessel_art18_printed_residual,
    ci_taylor,
    contour_integral_exp_over_z,
    ei_complex,
    fundamental_theorem_residual,
    random_homotopic_pairs,
    si_taylor,
    unit_square_loop,
    validate_polyline,
    winding_offset,
)
from apps.service.lifn import ei
from apps.service.realnum import get_context

CI_1 = '0.337403922900968'
SI_1 = '0.946083070367183'

UPPER = Polyline.of(1, 1 + 1j, -1 + 1j, -1)
LOWER = Polyline.of(1, 1 - 1j, -1 - 1j, -1)
TAIL = Polyline.of(1, 2 + 1j)


# ── 복소 Ei ─────────────────────────────────────────────
class TestEiComplex:
    def test_real_axis_matches_real_ei(self):
        ctx = get_context()
        value = ei_complex(1, ctx)
        assert value.imag == 0
        assert abs(value.real - ei(1, ctx)) < ctx.real('1e-60')

    def test_imaginary_unit(self):
        ctx = get_context()
        value = ei_complex(1j, ctx)
        assert abs(value.real - ctx.real(CI_1)) < ctx.real('1e-15')
        assert abs(value.imag - (ctx.real(SI_1) + ctx.mp.pi / 2)) < ctx.real('1e-15')

    @pytest.mark.parametrize('z', [2 + 3j, -1 + 0.5j, 0.1 - 4j, 7j])
    def test_conjugate_symmetry(self, z):
        ctx = get_context()
        assert abs(ei_complex(z.conjugate(), ctx) - ctx.mp.conj(ei_complex(z, ctx))) < ctx.real('1e-55')

    @pytest.mark.parametrize('z', [3 + 4j, -2 - 1j, -10 + 0.1j])
    def test_against_mpmath(self, z):
        ctx = get_context()
        with mpmath.workdps(80):
            oracle = mpmath.ei(mpmath.mpc(z))
        assert abs(ei_complex(z, ctx) - oracle) < ctx.real('1e-50') * abs(oracle)

    def test_negative_axis_uses_principal_branch(self):
        ctx = get_context()
        value = ei_complex(-1, ctx)
        assert abs(value.real - ei(-1, ctx)) < ctx.real('1e-55')
        assert abs(value.imag - ctx.mp.pi) < ctx.real('1e-55')

    def test_string_input(self):
        ctx = get_context()
        assert ei_complex('2+3j', ctx) == ei_complex(2 + 3j, ctx)

    def test_zero(self):
        with pytest.raises(DomainError):
            ei_complex(0)


# ── 경로적분 ────────────────────────────────────────────
class TestContourIntegral:
    def test_degenerate_paths(self):
        assert contour_integral_exp_over_z(Polyline.of(2)) == 0
        assert contour_integral_exp_over_z(Polyline.of(2, 2)) == 0

    def test_upper_minus_lower_is_two_pi_i(self):
        ctx = get_context(30)
        difference = contour_integral_exp_over_z(UPPER, ctx) - contour_integral_exp_over_z(LOWER, ctx)
        assert abs(difference - 2 * ctx.mp.pi * 1j) < ctx.real('1e-10')

    def test_homotopic_pairs_agree(self):
        ctx = get_context(30)
        for first, second in random_homotopic_pairs(20, seed=0):
            assert first.vertices[0] == second.vertices[0] == 1
            assert first.vertices[-1] == second.vertices[-1]
            difference = contour_integral_exp_over_z(first, ctx) - contour_integral_exp_over_z(second, ctx)
            assert abs(difference) < ctx.real('1e-10')

    def test_homotopic_pairs_are_reproducible(self):
        assert random_homotopic_pairs(3, seed=7) == random_homotopic_pairs(3, seed=7)

    @pytest.mark.parametrize('k', [1, 2, 3])
    def test_winding_k_times(self, k):
        ctx = get_context(30)
        loops = unit_square_loop()
        for _ in range(k - 1):
            loops = loops.then(unit_square_loop())
        path = loops.then(TAIL)
        assert winding_offset(path) == k
        integral = contour_integral_exp_over_z(path, ctx)
        direct = ei_complex(2 + 1j, ctx) - ei_complex(1, ctx)
        assert abs(integral - direct - 2 * ctx.mp.pi * 1j * k) < ctx.real('1e-9')

    @pytest.mark.parametrize('path', [
        UPPER,
        LOWER,
        TAIL,
        Polyline.of(1, -2 + 3j, -3 - 1j, 0.5 - 2j),
        Polyline.of(-1 + 1j, -1 - 1j),
    ])
    def test_fundamental_theorem(self, path):
        ctx = get_context(30)
        assert fundamental_theorem_residual(path, ctx) < ctx.real('1e-10')

    def test_pole_proximity(self):
        with pytest.raises(PoleProximityError):
            contour_integral_exp_over_z(Polyline.of(-1, 1))
        with pytest.raises(PoleProximityError):
            validate_polyline(Polyline.of(1e-7 + 0j, 1))

    def test_pole_proximity_is_domain_error(self):
        with pytest.raises(DomainError):
            validate_polyline(Polyline.of(-1 + 1e-8j, 1 + 1e-8j))

    def test_empty_path(self):
        with pytest.raises(DomainError):
            validate_polyline(Polyline(()))


class TestWindingOffset:
    def test_square_loop(self):
        assert winding_offset(unit_square_loop()) == 1

    def test_reversed_loop(self):
        reversed_loop = Polyline(tuple(reversed(unit_square_loop().vertices)))
        assert winding_offset(reversed_loop) == -1

    def test_upper_and_lower_halves(self):
        assert winding_offset(UPPER) == 0
        assert winding_offset(LOWER) == -1

    def test_positive_axis_crossing_ignored(self):
        assert winding_offset(Polyline.of(2 + 1j, 2 - 1j, 3 + 1j)) == 0


# ── Si / Ci 와 적분 항등식 ──────────────────────────────
class TestSineCosineIntegrals:
    def test_values_at_one(self):
        ctx = get_context()
        assert abs(si_taylor(1, ctx) - ctx.real(SI_1)) < ctx.real('1e-15')
        assert abs(ci_taylor(1, ctx) - ctx.real(CI_1)) < ctx.real('1e-15')

    @pytest.mark.parametrize('x', ['0.1', '2.5', '10', '-3'])
    def test_si_against_mpmath(self, x):
        ctx = get_context()
        with mpmath.workdps(80):
            oracle = mpmath.si(mpmath.mpf(x))
        assert abs(si_taylor(x, ctx) - oracle) < ctx.real('1e-55')

    @pytest.mark.parametrize('x', ['0.1', '2.5', '10'])
    def test_ci_against_mpmath(self, x):
        ctx = get_context()
        with mpmath.workdps(80):
            oracle = mpmath.ci(mpmath.mpf(x))
        assert abs(ci_taylor(x, ctx) - oracle) < ctx.real('1e-55')

    def test_ci_domain(self):
        with pytest.raises(DomainError):
            ci_taylor(0)

    @pytest.mark.parametrize('x', ['0.1', '1', mpmath.pi])
    def test_identity_residuals(self, x):
        residuals = bessel_art18_check(x)
        assert residuals.ci_residual < mpmath.mpf('1e-12')
        assert residuals.si_residual < mpmath.mpf('1e-12')

    def test_printed_form_is_off(self):
        residual = bessel_art18_printed_residual(1)
        assert abs(residual - mpmath.pi / 2) < mpmath.mpf('1e-12')

    def test_identity_domain(self):
        with pytest.raises(DomainError):
            bessel_art18_check(0)
