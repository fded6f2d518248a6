"""
골든 파일 검증 관리 명령어.

사용법:
    python manage.py verify
    python manage.py verify comparativa --golden data/golden/comparativa.csv
"""
from django.core.management.base import CommandError

from apps.exceptions import VerificationMismatch
from apps.management.commands._base import LogintCommand
from apps.models import CellStatus
from apps.service.golden import GOLDEN_FILES, verify_golden


class Command(LogintCommand):
    help = '골든 파일(인쇄된 역사 표)을 셀 단위로 검증합니다. 불일치가 있으면 종료 코드 2.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('tables', nargs='*', help=f'검증할 표 (기본: {", ".join(GOLDEN_FILES)})')
        parser.add_argument('--golden', default=None, help='골든 파일 경로 (표를 하나만 지정할 때)')
        parser.add_argument('--verbose-cells', action='store_true', help='OK 셀도 모두 출력')

    def handle(self, *args, **options):
        tables = options['tables'] or list(GOLDEN_FILES)
        if options['golden'] and len(tables) != 1:
            raise CommandError('--golden 은 표 하나와 함께만 쓸 수 있습니다')
        ctx = self.context(options)
        lines = []
        failed = []
        for table_id in tables:
            try:
                report = verify_golden(table_id, options['golden'], ctx)
            except VerificationMismatch as e:
                report = e.report
                failed.append(report.table_id)
            for cell in report.cells:
                if options['verbose_cells'] or cell.status is not CellStatus.OK:
                    lines.append(cell.line(report.table_id))
            lines.append(f"{'FAIL' if report.failures else 'PASS'} {report.table_id} "
                         f"({len(report.failures)} failed, {len(report.infos)} info, {len(report.cells)} cells)")
        self.emit('\n'.join(lines) + '\n', options)
        if failed:
            raise VerificationMismatch(f"골든 검증 실패: {', '.join(failed)}")
