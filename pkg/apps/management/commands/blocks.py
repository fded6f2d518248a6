"""
블록(chiliad 1000 / myriad 10000)별 소수 개수 관리 명령어.

사용법:
    python manage.py blocks 100000 10000
    python manage.py blocks 1000000 10000 --li --sieve-cache .cache/sieve.bin
"""
from apps.management.commands._base import LogintCommand
from apps.service.primes import block_counts, myriad_comparison
from apps.service.realnum import format_fixed
from apps.utils.normalize import parse_integer


class Command(LogintCommand):
    help = '[0, limit) 를 size 블록으로 나눈 블록별 소수 개수를 표로 출력합니다.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('limit', type=parse_integer)
        parser.add_argument('size', type=parse_integer)
        parser.add_argument('--li', action='store_true',
                            help='두 번째 블록부터 li 증분 li(hi) - li(lo) 과 차이를 함께 출력')

    def handle(self, *args, **options):
        limit, size = options['limit'], options['size']
        counts = block_counts(limit, size)
        if not options['li']:
            rows = [[i * size, (i + 1) * size, count] for i, count in enumerate(counts.block_counts)]
            self.emit_table(['lo', 'hi', 'count'], rows, options)
            return

        ctx = self.context(options)
        digits = min(self.digits(options, ctx), 6)
        rows = [
            [r['lo'], r['hi'], r['count'], format_fixed(r['li_increment'], digits), format_fixed(r['difference'], digits)]
            for r in myriad_comparison(size, limit, size, ctx)
        ]
        self.emit_table(['lo', 'hi', 'count', 'li_increment', 'difference'], rows, options)
