"""
단일 실행 파일 진입점

    python logint.py <subcommand> [args...]

서브커맨드는 apps/management/commands 의 관리 명령과 같다. 하이픈 이름(fit-legendre, complex-demo)도 받는다.
종료 코드: 0 정상, 1 정의역/수렴 오류, 2 검증 불일치, 3 사용법 오류.
"""
import importlib
import os
import sys

SUBCOMMANDS = (
    'li', 'ei', 'constants', 'pi', 'blocks', 'quad', 'table',
    'approx', 'fit_legendre', 'complex_demo', 'verify',
)
EXIT_USAGE = 3


def _setup_django() -> None:
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    from django.apps import apps
    if not apps.ready:
        import django
        django.setup()


def usage() -> str:
    names = ', '.join(name.replace('_', '-') for name in SUBCOMMANDS)
    return f"usage: logint <subcommand> [options]  (subcommands: {names})"


def run(argv=None, stdout=None, stderr=None) -> int:
    """
    서브커맨드 실행

    Args:
        argv: 인자 목록 (None 이면 sys.argv[1:])
        stdout, stderr: 출력 스트림 (None 이면 sys.stdout / sys.stderr)

    Returns:
        종료 코드
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    stderr = stderr or sys.stderr
    _setup_django()
    from apps.utils.normalize import command_name

    if not argv:
        stderr.write(f"ERROR:usage:서브커맨드가 없습니다\n{usage()}\n")
        return EXIT_USAGE
    if argv[0] in ('-h', '--help'):
        (stdout or sys.stdout).write(usage() + '\n')
        return 0
    name = command_name(argv[0])
    if name not in SUBCOMMANDS:
        stderr.write(f"ERROR:usage:알 수 없는 서브커맨드 '{argv[0]}'\n{usage()}\n")
        return EXIT_USAGE

    module = importlib.import_module(f'apps.management.commands.{name}')
    command = module.Command(stdout=stdout, stderr=stderr)
    try:
        return command.main(argv[1:], prog_name='logint', subcommand=argv[0])
    except SystemExit as e:  # --help
        return int(e.code or 0)
