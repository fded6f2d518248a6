"""
명령어/근사식/표 이름 정규화, 수 인자 해석 (stdlib만 사용)
"""
from decimal import Decimal, InvalidOperation


def normalize_token(token: str) -> str:
    """
    입력 토큰 정규화

    - 앞뒤 공백 제거
    - 소문자 변환
    - 밑줄/공백을 하이픈으로 (fit_legendre → fit-legendre)

    Args:
        token: 원본 문자열

    Returns:
        정규화된 토큰
    """
    if not token:
        return ""
    return token.strip().lower().replace('_', '-').replace(' ', '-')


def command_name(token: str) -> str:
    """CLI 서브커맨드 → Django 관리 명령 이름 (fit-legendre → fit_legendre)"""
    return normalize_token(token).replace('-', '_')


# 표 이름 별칭 → 정식 이름
_TABLE_ALIASES = {
    'bessel1810': 'bessel1810',
    'bessel-1810': 'bessel1810',
    'bessel': 'bessel1810',
    'soldner': 'soldner',
    'comparativa': 'comparativa',
    'comparison': 'comparativa',
    'constants': 'constants',
}


def table_name(token: str) -> str | None:
    """표 이름 정규화. 모르는 이름이면 None"""
    return _TABLE_ALIASES.get(normalize_token(token))


def _decimal(token: str) -> Decimal:
    try:
        return Decimal(token)
    except InvalidOperation:
        raise ValueError(f"수가 아닙니다: {token}") from None


def parse_integer(text: str) -> int:
    """
    정수 인자 해석. '1000000', '1e6', '10^6', '1_000_000' 허용

    Raises:
        ValueError: 정수가 아닐 때
    """
    token = str(text).strip().replace('_', '')
    if '^' in token:
        base, exponent = token.split('^', 1)
        return int(base) ** int(exponent)
    value = _decimal(token)
    if value != value.to_integral_value():
        raise ValueError(f"정수가 아닙니다: {text}")
    return int(value)


def parse_real(text: str) -> str:
    """실수 인자 정규화: '10^6' 은 정수 문자열로, 나머지는 십진 표기 그대로"""
    token = str(text).strip().replace('_', '')
    if '^' in token:
        return str(parse_integer(token))
    _decimal(token)
    return token
