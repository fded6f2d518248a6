"""
십진 문자열 자릿수 비교 (stdlib만 사용)
"""


def _split_decimal(text: str) -> tuple[str, str]:
    text = text.strip().replace(',', '.')
    if '.' not in text:
        return text, ''
    whole, frac = text.split('.', 1)
    return whole, frac


def matching_decimals(computed: str, printed: str) -> int:
    """
    두 십진 문자열이 소수점 이하 몇 번째 자리까지 일치하는지

    정수부가 다르면 -1. 인쇄값은 쉼표 소수점(예: "1,4513692346")도 허용한다.

    Args:
        computed: 계산값 (충분히 긴 자릿수, 잘라낸 문자열)
        printed: 인쇄값

    Returns:
        일치하는 소수 자릿수 (printed 가 끝날 때까지 모두 같으면 printed 의 소수 자릿수)
    """
    c_whole, c_frac = _split_decimal(computed)
    p_whole, p_frac = _split_decimal(printed)
    if c_whole.lstrip('+') != p_whole.lstrip('+'):
        return -1
    count = 0
    for c_digit, p_digit in zip(c_frac, p_frac):
        if c_digit != p_digit:
            break
        count += 1
    return count
