"""
골든 파일(인쇄된 역사 표) 셀 단위 검증

표별 허용 오차:
    bessel1810  : li 인쇄값 ±5×10^-4. 소수 개수/초과 열, 현대 li 와의 차이는 INFO
    comparativa : 모든 정수 셀 ±2
    constants   : 맞는 소수 자릿수가 인쇄 기록과 정확히 일치

위반 셀이 하나라도 있으면 VerificationMismatch (CLI exit 2).
"""
import csv
import logging
from pathlib import Path

from django.conf import settings

from apps.exceptions import GoldenFileError, VerificationMismatch
from apps.models import CellStatus, CountingConvention, GoldenCell, GoldenReport
from apps.service.approx import comparison_table
from apps.service.constants import euler_gamma, soldner_mu
from apps.service.historical import bessel_table_1810
from apps.service.lifn import li_pv
from apps.service.primes import prime_pi
from apps.service.realnum import RealContext, format_fixed, get_context
from apps.utils.digits import matching_decimals
from apps.utils.normalize import table_name

logger = logging.getLogger(__name__)

GOLDEN_FILES = {
    'bessel1810': 'bessel_1810.csv',
    'comparativa': 'comparativa.csv',
    'constants': 'constants.csv',
}
BESSEL_LI_TOLERANCE = '5e-4'
COMPARATIVA_TOLERANCE = 2
_CONSTANT_EXTRA_DIGITS = 5


def golden_path_for(table_id: str) -> Path:
    """GOLDEN_DIR 아래 기본 골든 파일 경로"""
    return Path(settings.GOLDEN_DIR) / GOLDEN_FILES[table_id]


def _read_rows(path: Path, required: set[str]) -> list[dict]:
    if not path.exists():
        raise GoldenFileError(f"골든 파일이 없습니다: {path}")
    with open(path, newline='', encoding='utf-8') as f:
        reader = csv.DictReader(f)
        missing = required - set(reader.fieldnames or ())
        if missing:
            raise GoldenFileError(f"골든 파일 {path} 에 열이 없습니다: {sorted(missing)}")
        return list(reader)


def _int_cell(raw: dict, column: str) -> int:
    """정수 셀. 형식이 틀리면 GoldenFileError"""
    text = (raw.get(column) or '').strip()
    try:
        return int(text)
    except ValueError:
        raise GoldenFileError(f"골든 파일 {column} 열의 정수 값을 읽을 수 없습니다: {text!r}") from None


def _real_cell(raw: dict, column: str, ctx: RealContext):
    """실수 셀. 형식이 틀리면 GoldenFileError"""
    text = (raw.get(column) or '').strip()
    try:
        return ctx.real(text)
    except (ValueError, TypeError):
        raise GoldenFileError(f"골든 파일 {column} 열의 실수 값을 읽을 수 없습니다: {text!r}") from None


def _check_bessel1810(rows: list[dict], report: GoldenReport, ctx: RealContext) -> None:
    mp = ctx.mp
    tolerance = ctx.real(BESSEL_LI_TOLERANCE)
    computed = {int(row.x): row for row in bessel_table_1810(ctx).rows}
    for raw in rows:
        x = _int_cell(raw, 'x')
        key = f"x={x}"
        row = computed.get(x)
        if row is None:
            report.add(GoldenCell(key, 'x', raw['x'], '', CellStatus.FAIL, '계산 표에 없는 행'))
            continue

        printed_li = _real_cell(raw, 'li_printed', ctx)
        diff = row.li_value - printed_li
        status = CellStatus.OK if abs(diff) <= tolerance else CellStatus.FAIL
        report.add(GoldenCell(key, 'li', raw['li_printed'], format_fixed(row.li_value, 6), status,
                              f"diff={mp.nstr(diff, 3)}"))

        modern = li_pv(x, ctx)
        if format_fixed(modern, 6) != raw['li_printed']:
            report.add(GoldenCell(key, 'li_modern', raw['li_printed'], format_fixed(modern, 9), CellStatus.INFO,
                                  f"현대 li 와 차이 {mp.nstr(modern - printed_li, 3)}"))

        if raw.get('pi_printed'):
            printed_pi = _int_cell(raw, 'pi_printed')
            modern_pi = prime_pi(x, CountingConvention.BESSEL_1810)
            if modern_pi != printed_pi:
                report.add(GoldenCell(key, 'pi', raw['pi_printed'], str(modern_pi), CellStatus.INFO,
                                      f"인쇄 소수 개수 차이 {printed_pi - modern_pi:+d} (1 포함 규약)"))
            if raw.get('excess_printed'):
                excess = printed_li - printed_pi
                report.add(GoldenCell(key, 'excess', raw['excess_printed'], format_fixed(excess, 2), CellStatus.INFO,
                                      '인쇄 li - 인쇄 소수 개수'))


def _check_comparativa(rows: list[dict], report: GoldenReport, ctx: RealContext) -> None:
    ns = [_int_cell(raw, 'n') for raw in rows]
    computed = comparison_table(ns, ctx=ctx)
    for raw, row in zip(rows, computed):
        key = f"n={row.n}"
        cells = {'pi': row.pi_n, **row.columns}
        for column in ('pi', 'x_over_lnx', 'legendre', 'li'):
            printed = _int_cell(raw, column)
            value = cells[column]
            diff = value - printed
            status = CellStatus.OK if abs(diff) <= COMPARATIVA_TOLERANCE else CellStatus.FAIL
            report.add(GoldenCell(key, column, raw[column], str(value), status, f"diff={diff:+d}"))


def _check_constants(rows: list[dict], report: GoldenReport, ctx: RealContext) -> None:
    for raw in rows:
        name, source, printed = raw['name'], raw['source'], raw['printed'].strip()
        expected = _int_cell(raw, 'correct_decimals')
        decimals = len(printed.replace(',', '.').split('.', 1)[-1])
        if name == 'gamma':
            result = euler_gamma(decimals + _CONSTANT_EXTRA_DIGITS)
        elif name == 'mu':
            result = soldner_mu(decimals + _CONSTANT_EXTRA_DIGITS)
        else:
            raise GoldenFileError(f"알 수 없는 상수 이름: {name}")
        computed = result.digit_string()
        matched = matching_decimals(computed, printed)
        status = CellStatus.OK if matched == expected else CellStatus.FAIL
        report.add(GoldenCell(f"{name}/{source}", 'correct_decimals', str(expected), str(matched), status,
                              f"computed={computed}"))


_CHECKS = {
    'bessel1810': (_check_bessel1810, {'x', 'li_printed', 'pi_printed', 'excess_printed'}),
    'comparativa': (_check_comparativa, {'n', 'pi', 'x_over_lnx', 'legendre', 'li'}),
    'constants': (_check_constants, {'name', 'source', 'printed', 'correct_decimals'}),
}


def verify_golden(table_id: str, golden_path=None, ctx: RealContext | None = None) -> GoldenReport:
    """
    골든 파일 셀 단위 비교

    Args:
        table_id: 'bessel1810' | 'comparativa' | 'constants' (별칭 허용)
        golden_path: None 이면 GOLDEN_DIR 기본 파일

    Returns:
        GoldenReport (위반이 없을 때)

    Raises:
        VerificationMismatch: 허용 오차를 넘는 셀이 있을 때 (report 첨부)
        GoldenFileError: 파일이 없거나 열이 부족하거나 셀 값을 읽을 수 없을 때
    """
    canonical = table_name(table_id)
    if canonical not in _CHECKS:
        raise GoldenFileError(f"검증할 수 없는 표 이름: {table_id}")
    path = Path(golden_path) if golden_path else golden_path_for(canonical)
    check, required = _CHECKS[canonical]

    report = GoldenReport(canonical, str(path))
    check(_read_rows(path, required), report, ctx or get_context())

    for cell in report.infos:
        logger.info(cell.line(canonical))
    if report.failures:
        names = ', '.join(f"{c.row}/{c.column}" for c in report.failures)
        raise VerificationMismatch(f"{canonical} 골든 검증 실패: {names}", report=report)
    logger.info("%s 골든 검증 통과 (%s 셀)", canonical, len(report.cells))
    return report
