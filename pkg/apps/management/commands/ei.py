"""
Ei(y) 계산 관리 명령어.

사용법:
    python manage.py ei 1 --digits 20
    python manage.py ei -- -5
"""
from apps.management.commands._base import LogintCommand
from apps.service.lifn import ei
from apps.service.realnum import format_fixed
from apps.utils.normalize import parse_real


class Command(LogintCommand):
    help = '지수적분 Ei(y) (y ≠ 0, 주값) 를 출력합니다.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('y', type=parse_real)

    def handle(self, *args, **options):
        ctx = self.context(options)
        self.emit(format_fixed(ei(options['y'], ctx), self.digits(options, ctx)), options)
