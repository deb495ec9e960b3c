class QfiMziError(Exception):
    """패키지 공통 예외의 베이스."""


class InvalidParameterError(QfiMziError, ValueError):
    """입력 파라미터가 타입 불변식 또는 연산 전제조건을 위반."""


class NoInformationError(QfiMziError):
    """Fisher 정보가 0 (전부 진공 입력 등)."""

    def __init__(self, detail: str = "no information"):
        super().__init__(detail)


class SingularFisherError(QfiMziError):
    """sum-sum 블록이 0이라 축약이 정의되지 않음."""

    def __init__(self, detail: str = "singular sum block"):
        super().__init__(detail)


class DegenerateSplitterError(QfiMziError):
    """|TR| = 0 인 빔 스플리터에서 정의되지 않는 최적값."""

    def __init__(self, detail: str = "degenerate splitter"):
        super().__init__(detail)


class InsensitiveWorkingPointError(QfiMziError):
    """차분 강도 신호의 위상 미분이 0인 동작점."""

    def __init__(self, detail: str = "insensitive working point"):
        super().__init__(detail)


class CutoffTooSmallError(QfiMziError):
    """Fock 절단에서 꼬리 질량이 허용치를 넘음."""

    def __init__(self, detail: str = "cutoff too small"):
        super().__init__(detail)


class OracleEnvelopeError(QfiMziError):
    """오라클이 지원하지 않는 파라미터 범위."""


class UsageError(QfiMziError):
    """CLI 사용법 오류 (exit code 1)."""
