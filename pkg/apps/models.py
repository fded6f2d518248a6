"""
로그 적분 계산 도메인 객체

값 객체(frozen dataclass)는 생성 후 변경되지 않으므로 여러 스레드에서 그대로 공유해도 된다.
표/체 결과처럼 행을 누적하는 객체는 일반 클래스로 둔다.
"""
from dataclasses import dataclass, field
from enum import Enum

import numpy as np


# === 규약 (convention) ===

class LiConvention(str, Enum):
    """li(x) 표기 규약"""
    PV_FROM_ZERO = 'pv'  # 0 부터의 주값 적분
    FROM_TWO = 'from2'  # ∫_2^x dt/ln t = li(x) - li(2)


class CountingConvention(str, Enum):
    """소수 개수 규약"""
    MODERN = 'modern'
    BESSEL_1810 = 'bessel1810'  # 1 을 소수로 셈 (MODERN + 1)


class ApproxTag(str, Enum):
    """π(x) 근사식 종류"""
    X_OVER_LNX = 'x-over-lnx'
    LEGENDRE = 'legendre'
    DISCRETE_SUM = 'discrete-sum'
    ENCKE = 'encke'
    LI_PV = 'li-pv'
    LI_FROM2 = 'li-from2'
    RIEMANN_R = 'riemann-r'
    LEGENDRE_1798 = 'legendre-1798'
    SHIFTED_SUM = 'shifted-sum'
    LEGENDRE_GENERAL = 'legendre-general'


# Legendre 상수 (인쇄값 그대로)
LEGENDRE_A = '1.08366'
RIEMANN_R_DEFAULT_NMAX = 20
SHIFTED_SUM_DEFAULT_SHIFT = '0.5'


@dataclass(frozen=True)
class ApproxMethod:
    """근사식 + 매개변수. params 는 근사식별 (문자열/정수) 튜플"""
    tag: ApproxTag
    params: tuple = ()

    @classmethod
    def legendre(cls, A=LEGENDRE_A) -> 'ApproxMethod':
        return cls(ApproxTag.LEGENDRE, (A,))

    @classmethod
    def legendre_general(cls, A='1', B='-' + LEGENDRE_A) -> 'ApproxMethod':
        return cls(ApproxTag.LEGENDRE_GENERAL, (A, B))

    @classmethod
    def riemann_r(cls, nmax: int = RIEMANN_R_DEFAULT_NMAX) -> 'ApproxMethod':
        return cls(ApproxTag.RIEMANN_R, (nmax,))

    @classmethod
    def shifted_sum(cls, shift=SHIFTED_SUM_DEFAULT_SHIFT) -> 'ApproxMethod':
        return cls(ApproxTag.SHIFTED_SUM, (shift,))

    @property
    def label(self) -> str:
        if not self.params:
            return self.tag.value
        return f"{self.tag.value}({','.join(str(p) for p in self.params)})"


# === 상수 ===

@dataclass(frozen=True)
class ConstantResult:
    """고정밀 상수 계산 결과"""
    value: object  # mpf (작업 정밀도 precision 의 컨텍스트)
    digits_requested: int
    method_tag: str
    precision: int

    def digit_string(self) -> str:
        """소수점 이하 digits_requested 자리까지 잘라낸(반올림 아님) 문자열. 인쇄된 '정확한 자릿수' 비교용"""
        from apps.service.realnum import format_truncated
        return format_truncated(self.value, self.digits_requested)


# === 역사적 점화식 ===

@dataclass(frozen=True)
class SoldnerCoeffs:
    """Soldner 계수 A'', A''', A'''', ... (기준점 a)"""
    a: object
    coeffs: tuple


@dataclass(frozen=True)
class BesselCoeffs:
    """Bessel 계수 A', A'', A''', ... (비율 a)"""
    a: object
    coeffs: tuple


@dataclass(frozen=True)
class StepResult:
    """급수 한 단계 결과: 값, 오차 추정(생략 꼬리 + 반올림), 사용한 항 수"""
    value: object
    error_estimate: object
    terms_used: int


@dataclass(frozen=True)
class LiTableRow:
    x: object
    li_value: object
    error_estimate: object | None = None  # 누적 오차 추정
    historical_li: str | None = None  # 인쇄값 (문자열 그대로)
    historical_pi: int | None = None
    excess: str | None = None  # 인쇄된 '초과' 열 (소수 2자리)


class LiTable:
    """li(x) 표 (행 누적)"""

    def __init__(self, method: str):
        self.method: str = method  # 'soldner' | 'bessel1810' | 'bessel-chain'
        self.rows: list[LiTableRow] = []

    def add_row(self, row: LiTableRow) -> None:
        self.rows.append(row)

    def row_at(self, x) -> LiTableRow | None:
        for row in self.rows:
            if row.x == x:
                return row
        return None

    def __len__(self):
        return len(self.rows)


# === 구적법 ===

@dataclass(frozen=True)
class QuadratureRule:
    """[-1, 1] 위 n 점 Gauss-Legendre 규칙 (노드 오름차순)"""
    order: int
    nodes: tuple
    weights: tuple
    precision: int


# === 소수 ===

@dataclass
class SieveSegment:
    """반개구간 [lo, hi) 의 홀수 합성수 표시. composite[i] 는 정수 lo_odd + 2i"""
    lo: int
    hi: int
    composite: np.ndarray

    @property
    def first_odd(self) -> int:
        return self.lo | 1

    def primes(self) -> np.ndarray:
        """구간 안의 소수 (2 포함 여부는 구간이 2를 덮는지로 결정)"""
        odd = self.first_odd + 2 * np.flatnonzero(~self.composite)
        if self.lo <= 2 < self.hi:
            return np.concatenate((np.array([2], dtype=np.int64), odd.astype(np.int64)))
        return odd.astype(np.int64)


class PrimeCounts:
    """블록(chiliad/myriad)별 소수 개수와 블록 경계 누적값"""

    def __init__(self, limit: int, block_size: int, block_counts: list[int]):
        self.limit: int = limit
        self.block_size: int = block_size
        self.block_counts: list[int] = block_counts
        # 블록 경계 x → π(x)
        self.pi_checkpoints: dict[int, int] = {}
        running = 0
        for i, count in enumerate(block_counts):
            running += count
            self.pi_checkpoints[(i + 1) * block_size] = running

    @property
    def total(self) -> int:
        return sum(self.block_counts)


@dataclass(frozen=True)
class ComparisonRow:
    """π(n) 대 근사식 비교표 한 행. columns: 열 이름 → 반올림 정수 (표시용), values: 열 이름 → 원래 값"""
    n: int
    pi_n: int
    columns: dict = field(default_factory=dict)
    values: dict = field(default_factory=dict)


# === 복소 경로 ===

@dataclass(frozen=True)
class Polyline:
    """꺾은선 경로 (복소 꼭짓점 순서)"""
    vertices: tuple

    @classmethod
    def of(cls, *points) -> 'Polyline':
        return cls(tuple(complex(p) if isinstance(p, (int, float)) else p for p in points))

    def segments(self):
        return list(zip(self.vertices, self.vertices[1:]))

    def then(self, other: 'Polyline') -> 'Polyline':
        """other 의 첫 꼭짓점이 self 의 끝점과 같을 때 이어붙임"""
        return Polyline(self.vertices + other.vertices[1:])


# === 출력 ===

class OutputFormat(str, Enum):
    CSV = 'csv'
    MD = 'md'


@dataclass(frozen=True)
class OutputSpec:
    """표 형식, 출력 경로(None 이면 stdout), 출력 소수 자릿수"""
    format: OutputFormat = OutputFormat.CSV
    path: str | None = None
    digits: int = 10


# === 골든 파일 검증 ===

class CellStatus(str, Enum):
    OK = 'OK'
    FAIL = 'FAIL'
    INFO = 'INFO'  # 허용 오차와 무관한 참고 차이 (실패 아님)


@dataclass(frozen=True)
class GoldenCell:
    row: str  # 행 키 (예: 'n=1000')
    column: str
    printed: str
    computed: str
    status: CellStatus
    note: str = ''

    def line(self, table_id: str) -> str:
        text = f"{self.status.value} {table_id} {self.row} {self.column}: printed={self.printed} computed={self.computed}"
        return f"{text} ({self.note})" if self.note else text


class GoldenReport:
    """골든 파일 한 개의 셀 단위 비교 결과"""

    def __init__(self, table_id: str, path: str):
        self.table_id: str = table_id
        self.path: str = path
        self.cells: list[GoldenCell] = []

    def add(self, cell: GoldenCell) -> None:
        self.cells.append(cell)

    @property
    def failures(self) -> list[GoldenCell]:
        return [c for c in self.cells if c.status is CellStatus.FAIL]

    @property
    def infos(self) -> list[GoldenCell]:
        return [c for c in self.cells if c.status is CellStatus.INFO]

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        return [cell.line(self.table_id) for cell in self.cells]
