from typing import Final


class Tolerance:

    # 닫힌 형태 대수 항등식 기본 상대 허용오차
    ALGEBRAIC_REL: Final[float] = 1e-12
    # κ = 0 판정 (스케일 1 + |α|²cosh2r 에 곱함)
    KAPPA_ZERO_REL: Final[float] = 1e-9
    # 오라클 동등성
    ORACLE_REL: Final[float] = 1e-6
    ORACLE_ABS: Final[float] = 1e-8
    # Fock 꼬리 질량 / 노름
    TAIL: Final[float] = 1e-12
    NORM: Final[float] = 1e-10


class OracleLimit:

    ALPHA_MAX: Final[float] = 1.5
    VARPI_MAX: Final[float] = 1.0
    SQUEEZE_MAX: Final[float] = 0.4
    TAU_MARGIN: Final[float] = 0.1
    MIN_CUTOFF: Final[int] = 8
    # 이 범위 안에서는 DEFAULT_CUTOFF 로 충분
    SMALL_ALPHA_MAX: Final[float] = 1.0
    SMALL_SQUEEZE_MAX: Final[float] = 0.3
    DEFAULT_CUTOFF: Final[int] = 40
    BOUNDARY_CUTOFF: Final[int] = 60
    TAIL_WINDOW: Final[int] = 5


class CsvFormat:

    SIGNIFICANT_DIGITS: Final[int] = 17
    LINE_END: Final[str] = "\n"


class ExitCode:

    OK: Final[int] = 0
    USAGE: Final[int] = 1
    VERIFY_FAILED: Final[int] = 2
