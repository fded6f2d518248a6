"""
Django settings for config project.
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Load environment variables from .env file
load_dotenv(BASE_DIR / '.env')

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-change-this-in-production')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.getenv('DEBUG', 'True') == 'True'

ALLOWED_HOSTS = []


# Application definition
# 웹/ORM 없이 관리 명령어(CLI)와 설정 계층만 사용

INSTALLED_APPS = [
    'apps',
]

DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'ko-kr'

TIME_ZONE = 'Asia/Seoul'

USE_I18N = True

USE_TZ = True


# 고정밀 계산 설정 (환경변수 또는 기본값)
LOGINT = {
    # 작업 정밀도 (유효 십진 자릿수). 출력 자릿수는 PRECISION - GUARD_DIGITS 이하로 제한
    'PRECISION': int(os.getenv('LOGINT_PRECISION', '64')),
    'GUARD_DIGITS': int(os.getenv('LOGINT_GUARD_DIGITS', '8')),
    # exp(x) 결과가 10^MAX_DECIMAL_EXPONENT 를 넘으면 overflow 로 처리
    'MAX_DECIMAL_EXPONENT': int(os.getenv('LOGINT_MAX_DECIMAL_EXPONENT', '100000')),
    # 상수 계산 자릿수 상한 (γ, μ)
    'GAMMA_DIGITS_MAX': int(os.getenv('LOGINT_GAMMA_DIGITS_MAX', '100')),
    'MU_DIGITS_MAX': int(os.getenv('LOGINT_MU_DIGITS_MAX', '50')),
    # 복소 경로적분: 16점 Gauss-Legendre, 패널 2배씩 늘려가며 연속 결과 차이 < TOLERANCE
    'CONTOUR_PRECISION': int(os.getenv('LOGINT_CONTOUR_PRECISION', '30')),
    'CONTOUR_TOLERANCE': float(os.getenv('LOGINT_CONTOUR_TOLERANCE', '1e-12')),
    'CONTOUR_MAX_PANELS': int(os.getenv('LOGINT_CONTOUR_MAX_PANELS', '4096')),
}

# 분할 체 설정
SIEVE = {
    'LIMIT': int(os.getenv('LOGINT_SIEVE_LIMIT', str(10 ** 8))),
    'SEGMENT_SIZE': int(os.getenv('LOGINT_SIEVE_SEGMENT_SIZE', str(2 ** 18))),  # 구간 폭 (짝수)
    # 구간 병렬 체질 스레드 수 (1=순차). 병합은 구간 인덱스 순서라 결과는 항상 동일
    'WORKERS': int(os.getenv('LOGINT_SIEVE_WORKERS', '4')),
    # 블록 카운트 캐시 파일 경로 (빈 값이면 캐시 사용 안 함)
    'CACHE_PATH': os.getenv('LOGINT_SIEVE_CACHE', ''),
}

# 역사적 인쇄값(골든 파일) 디렉터리
GOLDEN_DIR = Path(os.getenv('LOGINT_GOLDEN_DIR', str(BASE_DIR / 'data' / 'golden')))

LOGGING_LEVEL = os.getenv('LOGGING_LEVEL', 'INFO')

# 로깅: formatter, console handler, root logger 통일 (stderr 로만 출력, stdout 은 결과 전용)
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'console': {
            'format': '%(levelname)s [%(name)s] %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'console',
        },
    },
    'root': {
        'level': LOGGING_LEVEL,
        'handlers': ['console'],
    },
}
