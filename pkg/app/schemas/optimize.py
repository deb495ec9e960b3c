from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator



# -----------------------------------------------------
# κ 영역 분류
# -----------------------------------------------------
class Regime(str, Enum):
    """
    4|TR|² 계수 κ의 부호에 따른 최적 빔 스플리터.

    - BALANCED_OPTIMAL: κ > 0, τ = π/4 에서 최대
    - TRANSMISSION_INDEPENDENT: κ = 0 (허용오차 내), 𝓕가 T와 무관
    - DEGENERATE_OPTIMAL: κ < 0, T ∈ {0, 1} 에서 최대
    """
    BALANCED_OPTIMAL = "balanced_optimal"
    TRANSMISSION_INDEPENDENT = "transmission_independent"
    DEGENERATE_OPTIMAL = "degenerate_optimal"


class KappaRegime(BaseModel):
    """
    κ 값과 영역.

    Attributes:
        regime (Regime): 분류 결과
        kappa (float): κ
        tolerance (float): κ = 0 판정에 사용한 절대 허용오차
    """
    model_config = ConfigDict(frozen=True)

    regime: Regime
    kappa: float
    tolerance: float = Field(0.0, ge=0.0)

    @classmethod
    def classify(cls, kappa: float, tolerance: float) -> "KappaRegime":
        return cls(regime=cls._regime_of(kappa, tolerance), kappa=kappa, tolerance=tolerance)

    @model_validator(mode="after")
    def _check_sign(self) -> "KappaRegime":
        expected = KappaRegime._regime_of(self.kappa, self.tolerance)
        if expected is not self.regime:
            raise ValueError(
                f"regime {self.regime.value} inconsistent with kappa={self.kappa} (tol={self.tolerance})"
            )
        return self

    @staticmethod
    def _regime_of(kappa: float, tolerance: float) -> Regime:
        if abs(kappa) <= tolerance:
            return Regime.TRANSMISSION_INDEPENDENT
        return Regime.BALANCED_OPTIMAL if kappa > 0.0 else Regime.DEGENERATE_OPTIMAL



# -----------------------------------------------------
# 플래그가 붙는 최적값
# -----------------------------------------------------
class Optimum(BaseModel):
    """
    0/0 극한 등에서 나온 최적값은 degenerate=True 로 표시한다.

    Attributes:
        value (float): 최적값 (|T|² 또는 위상 [rad])
        degenerate (bool): 정의가 퇴화된 경우의 대체값 여부
    """
    model_config = ConfigDict(frozen=True)

    value: float
    degenerate: bool = False
