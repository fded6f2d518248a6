"""
π(x) 소수 개수 관리 명령어.

사용법:
    python manage.py pi 1000000
    python manage.py pi 1e5 --convention bessel1810
"""
from apps.management.commands._base import LogintCommand
from apps.models import CountingConvention
from apps.service.primes import prime_pi
from apps.utils.normalize import parse_integer


class Command(LogintCommand):
    help = 'x 이하 소수 개수 π(x) 를 출력합니다 (bessel1810 규약은 1 을 소수로 셉니다).'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('x', type=parse_integer)
        parser.add_argument('--convention', choices=[c.value for c in CountingConvention],
                            default=CountingConvention.MODERN.value)

    def handle(self, *args, **options):
        count = prime_pi(options['x'], CountingConvention(options['convention']))
        self.emit(str(count), options)
