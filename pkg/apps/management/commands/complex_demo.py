"""
복소 경로 관찰 점검 관리 명령어: 경로 무관성, 감김 가산성, 기본정리, sin/cos 적분 항등식.

사용법:
    python manage.py complex_demo
    python logint.py complex-demo --format md
"""
from apps.management.commands._base import LogintCommand
from apps.models import Polyline
from apps.service.complexpath import (
    bessel_art18_check,
    bessel_art18_printed_residual,
    contour_integral_exp_over_z,
    fundamental_theorem_residual,
    random_homotopic_pairs,
    unit_square_loop,
)
from apps.service.realnum import get_context, logint_setting

UPPER_PATH = Polyline.of(1, 1 + 2j, -1 + 2j, -1)
LOWER_PATH = Polyline.of(1, 1 - 2j, -1 - 2j, -1)
ART18_POINTS = ('0.1', '1', 'pi')


class Command(LogintCommand):
    help = 'e^z/z 경로적분의 경로 무관성·감김·기본정리와 Ei(±ix) 의 Si/Ci 항등식 잔차를 출력합니다.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--pairs', type=int, default=20, help='무작위 동형 경로 쌍 개수')
        parser.add_argument('--seed', type=int, default=0)

    def handle(self, *args, **options):
        contour_ctx = get_context(options.get('precision') or int(logint_setting('CONTOUR_PRECISION')))
        mp = contour_ctx.mp
        rows = []

        two_pi_i = 2 * mp.pi * mp.j
        difference = contour_integral_exp_over_z(UPPER_PATH, contour_ctx) - contour_integral_exp_over_z(LOWER_PATH, contour_ctx)
        rows.append(['upper-minus-lower', mp.nstr(difference, 15), mp.nstr(abs(difference - two_pi_i), 3)])

        worst = mp.mpf(0)
        for first, second in random_homotopic_pairs(options['pairs'], options['seed']):
            gap = abs(contour_integral_exp_over_z(first, contour_ctx) - contour_integral_exp_over_z(second, contour_ctx))
            worst = max(worst, gap)
        rows.append([f"homotopic-pairs({options['pairs']})", 'max |difference|', mp.nstr(worst, 3)])

        tail = Polyline.of(1, 2 + 1j)
        base = contour_integral_exp_over_z(tail, contour_ctx)
        loops = unit_square_loop()
        path = tail
        for k in (1, 2, 3):
            path = loops.then(path)
            added = contour_integral_exp_over_z(path, contour_ctx) - base
            rows.append([f'winding-{k}', mp.nstr(added, 15), mp.nstr(abs(added - k * two_pi_i), 3)])

        for label, path in (('fundamental-theorem-upper', UPPER_PATH), ('fundamental-theorem-lower', LOWER_PATH)):
            rows.append([label, '', mp.nstr(fundamental_theorem_residual(path, contour_ctx), 3)])

        ctx = self.context(options)
        for point in ART18_POINTS:
            x = ctx.mp.pi if point == 'pi' else ctx.real(point)
            residuals = bessel_art18_check(x, ctx)
            rows.append([f'art18-ci(x={point})', '', ctx.mp.nstr(residuals.ci_residual, 3)])
            rows.append([f'art18-si(x={point})', '', ctx.mp.nstr(residuals.si_residual, 3)])
            rows.append([f'art18-printed-2ix(x={point})', 'info', ctx.mp.nstr(bessel_art18_printed_residual(x, ctx), 6)])

        self.emit_table(['check', 'value', 'residual'], rows, options)
