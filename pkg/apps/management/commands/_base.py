"""
로그 적분 관리 명령 공통 기반

- 공통 플래그: --digits, --precision, --format, --out, --sieve-cache
- 예외 → 종료 코드: 정상 0, 정의역/수렴 오류 1, 검증 불일치 2, 사용법 오류 3
- 오류는 stderr 에 한 줄 `ERROR:<code>:<message>`
"""
import sys
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError, handle_default_options

from apps.exceptions import LogintError
from apps.models import OutputFormat, OutputSpec
from apps.service.primes import sieve_cache_path
from apps.service.realnum import RealContext, clamp_digits, get_context
from apps.utils.format_ import render_table

EXIT_OK = 0
EXIT_USAGE = 3
DEFAULT_DIGITS = 10


class LogintCommand(BaseCommand):
    """공통 플래그와 종료 코드 규약을 가진 관리 명령"""
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--digits', type=int, default=DEFAULT_DIGITS,
                            help='출력 소수 자릿수 (precision - guard 를 넘으면 경고 후 제한)')
        parser.add_argument('--precision', type=int, default=None,
                            help='작업 정밀도 (유효 십진 자릿수, 기본 LOGINT_PRECISION)')
        parser.add_argument('--format', choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value,
                            help='표 출력 형식')
        parser.add_argument('--out', default=None, help='출력 파일 경로 (없으면 stdout)')
        parser.add_argument('--sieve-cache', default=None,
                            help='블록 카운트 캐시 파일 (기본 SIEVE CACHE_PATH, 모든 π(x) 계산에 사용)')

    # --- 옵션 해석 ---
    def context(self, options) -> RealContext:
        return get_context(options.get('precision'))

    def digits(self, options, ctx: RealContext) -> int:
        return clamp_digits(int(options.get('digits', DEFAULT_DIGITS)), ctx)

    def output_spec(self, options) -> OutputSpec:
        return OutputSpec(format=OutputFormat(options.get('format') or OutputFormat.CSV.value),
                          path=options.get('out'),
                          digits=int(options.get('digits', DEFAULT_DIGITS)))

    # --- 출력 ---
    def emit(self, text: str, options) -> None:
        """--out 이 있으면 파일(UTF-8)로, 없으면 stdout 으로"""
        spec = self.output_spec(options)
        if spec.path:
            path = Path(spec.path)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding='utf-8')
            self.stdout.write(self.style.SUCCESS(f'[OK] {path} 저장'))
        else:
            self.stdout.write(text, ending='' if text.endswith('\n') else '\n')

    def emit_table(self, headers: list[str], rows: list[list], options) -> None:
        self.emit(render_table(headers, rows, self.output_spec(options).format.value), options)

    def fail(self, error: LogintError) -> int:
        self.stderr.write(f"ERROR:{error.code}:{error}")
        return error.exit_code

    # --- 실행 ---
    def execute(self, *args, **options):
        with sieve_cache_path(options.get('sieve_cache')):
            return super().execute(*args, **options)

    def main(self, argv: list[str], prog_name: str = 'logint', subcommand: str | None = None) -> int:
        """
        인자 목록을 파싱해 실행하고 종료 코드를 돌려준다

        파서 오류는 argparse 의 sys.exit 대신 CommandError 로 받아 사용법 오류(3)로 처리한다.
        """
        parser = self.create_parser(prog_name, subcommand or self.__module__.rsplit('.', 1)[-1])
        parser.called_from_command_line = False
        try:
            options = parser.parse_args(argv)
        except CommandError as e:
            self.stderr.write(f"ERROR:usage:{e}")
            return EXIT_USAGE
        cmd_options = vars(options)
        args = cmd_options.pop('args', ())
        handle_default_options(options)
        try:
            self.execute(*args, **cmd_options)
        except LogintError as e:
            return self.fail(e)
        except CommandError as e:
            self.stderr.write(f"ERROR:usage:{e}")
            return EXIT_USAGE
        return EXIT_OK

    def run_from_argv(self, argv):
        """manage.py <cmd> ... 도 같은 종료 코드 규약을 따른다"""
        code = self.main(argv[2:], prog_name=Path(argv[0]).name, subcommand=argv[1])
        if code:
            sys.exit(code)
