"""
Gauss-Legendre 구적 관리 명령어: ∫_a^b dt/ln t 를 n 점 규칙으로.

--from/--to 가 없으면 ∫_{100000}^{200000} 시연 표(--orders 차수별)를 출력한다.

사용법:
    python manage.py quad
    python manage.py quad --orders 4,7,10,16,20 --panels 2
    python manage.py quad --from 100 --to 110 --nodes 5 --panels 1
"""
from django.core.management.base import CommandError

from apps.management.commands._base import LogintCommand
from apps.service.lifn import li_delta
from apps.service.quadrature import GAUSS_1815_ORDERS, gauss_1815_demo, integrate_recip_log, legendre_rule
from apps.service.realnum import format_fixed
from apps.utils.normalize import parse_real


def _orders(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(',') if part.strip())


class Command(LogintCommand):
    help = 'n 점 Gauss-Legendre 규칙으로 적분한 값과 li 기준값의 오차를 표로 출력합니다.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--from', dest='lower', type=parse_real, default=None, help='적분 하한 a (> 1)')
        parser.add_argument('--to', dest='upper', type=parse_real, default=None, help='적분 상한 b (≥ a)')
        parser.add_argument('--nodes', type=int, default=None,
                            help='규칙 차수 n (구간 지정 시 기본 10, 시연에서는 --orders 대신 사용)')
        parser.add_argument('--orders', type=_orders, default=GAUSS_1815_ORDERS, help='쉼표 구분 규칙 차수')
        parser.add_argument('--panels', type=int, default=1)

    def handle(self, *args, **options):
        ctx = self.context(options)
        digits = self.digits(options, ctx)
        lower, upper = options.get('lower'), options.get('upper')
        if (lower is None) != (upper is None):
            raise CommandError('--from 과 --to 는 함께 지정해야 합니다')
        if lower is not None:
            self._interval(lower, upper, options, ctx, digits)
            return

        mp = ctx.mp
        orders = (options['nodes'],) if options.get('nodes') else options['orders']
        rows = [
            [r['nodes'], format_fixed(r['value'], digits), format_fixed(r['reference'], digits),
             mp.nstr(r['abs_error'], 3), mp.nstr(r['rel_error'], 3)]
            for r in gauss_1815_demo(orders, options['panels'], ctx)
        ]
        self.emit_table(['nodes', 'value', 'reference', 'abs_error', 'rel_error'], rows, options)

    def _interval(self, lower, upper, options, ctx, digits):
        nodes = options.get('nodes') or 10
        panels = options['panels']
        value = integrate_recip_log(lower, upper, legendre_rule(nodes, ctx), panels, ctx)
        reference = li_delta(lower, upper, ctx)
        row = [ctx.mp.nstr(ctx.real(lower), 15), ctx.mp.nstr(ctx.real(upper), 15), nodes, panels,
               format_fixed(value, digits), format_fixed(reference, digits),
               ctx.mp.nstr(abs(value - reference), 3)]
        self.emit_table(['a', 'b', 'nodes', 'panels', 'value', 'li_delta', 'abs_error'], [row], options)
