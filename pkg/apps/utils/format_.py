"""
표 출력 포맷팅 (stdlib만 사용)

CSV: UTF-8, 쉼표 구분, '.' 소수점, 헤더 행, 천 단위 구분자 없음, 줄바꿈 '\n'
Markdown: 파이프 표
"""
import csv
import io


def render_csv(headers: list[str], rows: list[list]) -> str:
    """
    헤더 + 행을 CSV 문자열로

    Args:
        headers: 열 이름
        rows: 셀 값은 이미 문자열/정수로 포맷된 상태여야 한다

    Returns:
        CSV 문자열 (마지막 줄바꿈 포함)
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(headers)
    for row in rows:
        writer.writerow(['' if cell is None else cell for cell in row])
    return buffer.getvalue()


def render_markdown(headers: list[str], rows: list[list]) -> str:
    """파이프 표. 빈 셀(None)은 공백"""
    def line(cells):
        return '| ' + ' | '.join('' if c is None else str(c) for c in cells) + ' |'

    out = [line(headers), '|' + '|'.join('---' for _ in headers) + '|']
    out.extend(line(row) for row in rows)
    return '\n'.join(out) + '\n'


def render_table(headers: list[str], rows: list[list], fmt: str = 'csv') -> str:
    if fmt == 'md':
        return render_markdown(headers, rows)
    return render_csv(headers, rows)
