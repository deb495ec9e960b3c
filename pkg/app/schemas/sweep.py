import math

from enum import Enum
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.schemas.core import InputScenario



class SweepVar(str, Enum):
    T_SQUARED = "t_squared"
    DELTA_THETA = "delta_theta"
    THETA = "theta"
    PHI_INTERNAL = "phi_internal"

    @property
    def column(self) -> str:
        """CSV 헤더의 x 열 이름 (단위 포함)."""
        return "x_t_squared" if self is SweepVar.T_SQUARED else f"x_{self.value}_rad"


ScenarioKind = Literal["dual_coherent", "coh_sqz", "sqzcoh_sqz"]



# -----------------------------------------------------
# 요청 스키마
# -----------------------------------------------------
class OverlayOverride(BaseModel):
    """
    한 곡선(overlay)의 고정 파라미터 덮어쓰기.

    Attributes:
        label (str): CSV label 열
        values (Dict[str, float]): 시나리오/BS 파라미터 덮어쓰기
            예) {"t_squared": 0.25}, {"delta_theta": 1.0471975511965976}
        kind (str, optional): 시나리오 종류 자체를 바꿀 때 (같은 ⟨n⟩ 기준 곡선 등)
    """
    model_config = ConfigDict(frozen=True)

    label: str = "base"
    values: Dict[str, float] = Field(default_factory=dict)
    kind: Optional[ScenarioKind] = None


class SweepSpec(BaseModel):
    """
    파라미터 스윕 설정.

    Attributes:
        scenario (InputScenario): 기본 입력 상태
        sweep_var (SweepVar): 스윕 변수
        lo, hi (float): 스윕 구간 (lo < hi)
        n_points (int): 격자 점 수 (≥ 2)
        t_squared (float): 스윕하지 않을 때의 |T|²
        detection (bool): 차분 강도 검출 Δφ_diff 열 계산 여부 (이중 코히런트만)
        phi_internal (float, optional): 고정 내부 위상 φ
        phi_opt_t_squared (float, optional): 이 |T|² 에서의 φ_opt 로 φ 고정
        overlays (List[OverlayOverride]): 곡선별 덮어쓰기
        output (str, optional): CSV 경로
    """
    model_config = ConfigDict(frozen=True)

    scenario: InputScenario
    sweep_var: SweepVar
    lo: float
    hi: float
    n_points: int = Field(101, ge=2)
    t_squared: float = Field(0.5, ge=0.0, le=1.0)
    detection: bool = False
    phi_internal: Optional[float] = None
    phi_opt_t_squared: Optional[float] = Field(None, ge=0.0, le=1.0)
    overlays: List[OverlayOverride] = Field(default_factory=lambda: [OverlayOverride()])
    output: Optional[str] = None

    @model_validator(mode="after")
    def _check_fields(self) -> "SweepSpec":
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)) or not self.lo < self.hi:
            raise ValueError(f"lo must be smaller than hi (lo={self.lo}, hi={self.hi})")
        if not self.overlays:
            raise ValueError("overlays must not be empty")

        if self.sweep_var is SweepVar.T_SQUARED and not (0.0 <= self.lo and self.hi <= 1.0):
            raise ValueError("sweep_var t_squared needs 0 <= lo < hi <= 1")

        # overlay 의 kind 가 기본 시나리오를 바꾸므로 곡선마다 확인
        for overlay in self.overlays:
            kind = overlay.kind or self.scenario.kind
            dual = kind == "dual_coherent"
            where = f"overlay {overlay.label!r} ({kind})"
            if self.sweep_var is SweepVar.THETA and dual:
                raise ValueError(f"sweep_var theta needs a squeezed scenario: {where}")
            if self.sweep_var is SweepVar.PHI_INTERNAL and not (dual and self.detection):
                raise ValueError(f"sweep_var phi_internal needs the dual_coherent scenario with detection: {where}")
            if self.detection and not dual:
                raise ValueError(f"detection is only defined for the dual_coherent scenario: {where}")
        return self



# -----------------------------------------------------
# 응답 스키마
# -----------------------------------------------------
class SweepRow(BaseModel):
    """
    Attributes:
        overlay (int): overlay 순번
        label (str): overlay 라벨
        x (float): 스윕 변수 값
        fisher (float): 𝓕
        dphi_qcrb (float): 1/√𝓕 [rad], 𝓕 ≤ 0 이면 inf
        dphi_diff (float, optional): 차분 강도 검출 감도 [rad]
        kappa (float, optional): κ (스퀴징 시나리오)
    """
    model_config = ConfigDict(frozen=True)

    overlay: int
    label: str
    x: float
    fisher: float
    dphi_qcrb: float
    dphi_diff: Optional[float] = None
    kappa: Optional[float] = None


class SweepResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    sweep_var: SweepVar
    rows: List[SweepRow]
