"""
Legendre 상수 A 최소제곱 적합 관리 명령어.

사용법:
    python manage.py fit_legendre --lo 1e4 --hi 1e6 --samples 16
    python logint.py fit-legendre --lo 1e6 --hi 1e7
"""
from apps.management.commands._base import LogintCommand
from apps.service.approx import fit_legendre_constant
from apps.service.realnum import format_fixed
from apps.utils.normalize import parse_integer


class Command(LogintCommand):
    help = '[lo, hi] 로그 등간격 표본에서 Σ(π(x) - x/(ln x - A))² 를 최소화하는 A 를 출력합니다.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--lo', type=parse_integer, default=10 ** 4)
        parser.add_argument('--hi', type=parse_integer, default=10 ** 6)
        parser.add_argument('--samples', type=int, default=16)

    def handle(self, *args, **options):
        ctx = self.context(options)
        digits = min(self.digits(options, ctx), 6)
        value = fit_legendre_constant(options['lo'], options['hi'], options['samples'], ctx)
        self.emit(format_fixed(value, digits), options)
