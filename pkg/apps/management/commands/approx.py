"""
π(x) 근사식 관리 명령어.

사용법:
    python manage.py approx legendre 1e6
    python manage.py approx riemann-r 1e6 --nmax 20
    python manage.py approx legendre-general 1e6 --A 1 --B -1.08366
    python manage.py approx shifted-sum 1e4 --shift 0.5
"""
from apps.management.commands._base import LogintCommand
from apps.models import LEGENDRE_A, RIEMANN_R_DEFAULT_NMAX, SHIFTED_SUM_DEFAULT_SHIFT, ApproxMethod, ApproxTag
from apps.service.approx import approx_value
from apps.service.realnum import format_fixed
from apps.utils.normalize import normalize_token, parse_integer, parse_real


def build_method(tag: ApproxTag, options) -> ApproxMethod:
    """명령 옵션에서 매개변수를 채운 ApproxMethod"""
    if tag is ApproxTag.LEGENDRE:
        return ApproxMethod.legendre(options.get('A') or LEGENDRE_A)
    if tag is ApproxTag.LEGENDRE_GENERAL:
        return ApproxMethod.legendre_general(options.get('A') or '1', options.get('B') or '-' + LEGENDRE_A)
    if tag is ApproxTag.RIEMANN_R:
        return ApproxMethod.riemann_r(options.get('nmax') or RIEMANN_R_DEFAULT_NMAX)
    if tag is ApproxTag.SHIFTED_SUM:
        return ApproxMethod.shifted_sum(options.get('shift') or SHIFTED_SUM_DEFAULT_SHIFT)
    return ApproxMethod(tag)


class Command(LogintCommand):
    help = 'π(x) 근사식 값을 출력합니다.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('method', type=normalize_token, choices=[t.value for t in ApproxTag])
        parser.add_argument('x', type=parse_real)
        parser.add_argument('--A', type=parse_real, default=None, help='Legendre 상수 A')
        parser.add_argument('--B', type=parse_real, default=None, help='Legendre 일반식 상수 B')
        parser.add_argument('--nmax', type=parse_integer, default=None, help='Riemann R 항 수')
        parser.add_argument('--shift', type=parse_real, default=None, help='이동 이산합의 이동량')

    def handle(self, *args, **options):
        ctx = self.context(options)
        method = build_method(ApproxTag(options['method']), options)
        value = approx_value(method, options['x'], ctx)
        self.emit(format_fixed(value, self.digits(options, ctx)), options)
