"""
li(x) 계산 관리 명령어.

사용법:
    python manage.py li 1000 --digits 9
    python manage.py li 1e6 --convention from2
    python manage.py li 100 --method mu-quadrature
"""
from apps.management.commands._base import LogintCommand
from apps.models import LiConvention
from apps.service.lifn import li, li_from_mu
from apps.service.realnum import format_fixed
from apps.utils.normalize import normalize_token, parse_real

METHODS = ('series', 'mu-quadrature')


class Command(LogintCommand):
    help = 'li(x) 를 --digits 자리까지 출력합니다 (pv: 0 부터의 주값, from2: ∫_2^x dt/ln t).'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('x', type=parse_real)
        parser.add_argument('--convention', choices=[c.value for c in LiConvention],
                            default=LiConvention.PV_FROM_ZERO.value)
        parser.add_argument('--method', type=normalize_token, choices=METHODS, default='series',
                            help='series: Euler 급수, mu-quadrature: μ 부터 Gauss-Legendre 적분')

    def handle(self, *args, **options):
        ctx = self.context(options)
        digits = self.digits(options, ctx)
        convention = LiConvention(options['convention'])
        if options['method'] == 'mu-quadrature':
            value = li_from_mu(options['x'], ctx)
            if convention is LiConvention.FROM_TWO:
                value -= li(2, ctx=ctx)
        else:
            value = li(options['x'], convention, ctx)
        self.emit(format_fixed(value, digits), options)
