"""
유틸리티 모듈 (순수 함수만, stdlib만 사용)
"""
from apps.utils.digits import matching_decimals
from apps.utils.format_ import render_csv, render_markdown, render_table
from apps.utils.normalize import command_name, normalize_token, parse_integer, parse_real, table_name

__all__ = [
    'matching_decimals',
    'render_csv',
    'render_markdown',
    'render_table',
    'command_name',
    'normalize_token',
    'table_name',
    'parse_integer',
    'parse_real',
]
