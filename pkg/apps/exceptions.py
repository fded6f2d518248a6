"""
로그 적분 계산 예외 계층

CLI 는 code 를 `ERROR:<code>:` 접두어로, exit_code 를 프로세스 종료 코드로 사용한다.
정의역 오류 계열은 ValueError 를 함께 상속해 일반적인 `except ValueError` 에도 잡힌다.
"""


class LogintError(Exception):
    """모든 계산 오류의 기반 클래스"""
    code = 'error'
    exit_code = 1


class DomainError(LogintError, ValueError):
    """입력이 연산의 정의역 밖 (예: ln(0), li(1))"""
    code = 'domain'


class PrecisionOverflowError(DomainError):
    """요청 자릿수가 설정 상한을 넘음"""
    code = 'precision'


class StepTooLargeError(DomainError):
    """Soldner 단계 폭 x/a 가 0.5 를 넘음"""
    code = 'step'


class LimitExceededError(DomainError):
    """체 상한(10^8) 초과"""
    code = 'limit'


class AlignmentError(DomainError):
    """블록 크기/상한 정렬 위반"""
    code = 'alignment'


class PoleProximityError(DomainError):
    """경로가 원점(e^z/z 의 극) 에 너무 가까움"""
    code = 'pole'


class RealOverflowError(LogintError, OverflowError):
    """지수 범위 초과"""
    code = 'overflow'


class ConvergenceError(LogintError, ArithmeticError):
    """반복/급수가 허용 횟수 안에 수렴하지 않음"""
    code = 'convergence'


class VerificationMismatch(LogintError):
    """골든 파일 검증 실패. report 에 위반 셀 목록"""
    code = 'mismatch'
    exit_code = 2

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class GoldenFileError(DomainError):
    """골든 파일이 없거나 형식이 맞지 않음"""
    code = 'golden'
