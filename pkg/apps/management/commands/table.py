"""
역사적 표 재현 관리 명령어.

사용법:
    python manage.py table bessel1810
    python manage.py table soldner --x-max 100
    python manage.py table comparativa --verify data/golden/comparativa.csv
"""
import logging

from django.core.management.base import CommandError

from apps.management.commands._base import LogintCommand
from apps.models import CountingConvention
from apps.service.approx import COMPARATIVA_NS, COMPARISON_COLUMNS, comparison_table
from apps.service.golden import verify_golden
from apps.service.historical import bessel_table_1810, geometric_schedule, pi_discrepancies, soldner_table
from apps.service.primes import prime_pi
from apps.service.realnum import format_fixed
from apps.utils.normalize import parse_integer, table_name

logger = logging.getLogger(__name__)

TABLES = ('bessel1810', 'soldner', 'comparativa')


class Command(LogintCommand):
    help = 'Bessel 1810 표, Soldner 표, π(n) 비교표를 재현합니다. --verify 로 골든 파일과 비교합니다.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('table', help=f'표 이름 ({", ".join(TABLES)})')
        parser.add_argument('--verify', nargs='?', const='', default=None, metavar='GOLDEN',
                            help='출력 후 골든 파일 검증 (경로 생략 시 기본 파일)')
        parser.add_argument('--x-max', type=parse_integer, default=100, help='Soldner 표 상한 (≤ 10^4)')
        parser.add_argument('--schedule', choices=('unit', 'geometric'), default='unit', help='Soldner 단계 일정')

    def handle(self, *args, **options):
        name = table_name(options['table'])
        if name not in TABLES:
            raise CommandError(f"알 수 없는 표: {options['table']}")
        ctx = self.context(options)
        digits = self.digits(options, ctx)
        render = getattr(self, f'_render_{name}')
        render(ctx, digits, options)

        if options['verify'] is not None:
            if name == 'soldner':
                raise CommandError('soldner 표에는 골든 파일이 없습니다')
            report = verify_golden(name, options['verify'] or None, ctx)
            self.stdout.write(self.style.SUCCESS(f'[OK] {name} 골든 검증 통과 ({len(report.cells)} 셀)'))

    def _render_bessel1810(self, ctx, digits, options):
        table = bessel_table_1810(ctx)
        rows = []
        for row in table.rows:
            x = int(row.x)
            modern_pi = prime_pi(x, CountingConvention.BESSEL_1810) if row.historical_pi is not None else None
            rows.append([x, format_fixed(row.li_value, digits), ctx.mp.nstr(row.error_estimate, 3),
                         row.historical_li, row.historical_pi, modern_pi, row.excess])
        for item in pi_discrepancies(table):
            logger.info("Bessel 소수 개수 차이 x=%s: 인쇄 %s, 현대(1 포함) %s (%+d)",
                        item['x'], item['printed'], item['modern'], item['difference'])
        self.emit_table(['x', 'li', 'error_estimate', 'li_printed', 'pi_printed', 'pi_modern', 'excess_printed'],
                        rows, options)

    def _render_soldner(self, ctx, digits, options):
        x_max = options['x_max']
        schedule = geometric_schedule(x_max, ctx=ctx) if options['schedule'] == 'geometric' else None
        table = soldner_table(x_max, schedule, ctx=ctx)
        rows = [[ctx.mp.nstr(row.x, 15), format_fixed(row.li_value, digits), ctx.mp.nstr(row.error_estimate, 3)]
                for row in table.rows]
        self.emit_table(['x', 'li', 'error_estimate'], rows, options)

    def _render_comparativa(self, ctx, digits, options):
        rows = [[row.n, row.pi_n, *(row.columns[c] for c in COMPARISON_COLUMNS)]
                for row in comparison_table(COMPARATIVA_NS, ctx=ctx)]
        self.emit_table(['n', 'pi', *COMPARISON_COLUMNS], rows, options)
