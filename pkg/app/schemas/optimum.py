from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from app.schemas.core import InputScenario
from app.schemas.optimize import KappaRegime, Optimum



class OptimumReport(BaseModel):
    """
    optimum 서브커맨드 결과. 해가 없는 항목은 None 이고 notes 에 이유를 남긴다.

    Attributes:
        scenario (InputScenario): 최종 평가에 쓴 입력 (Δθ_opt 반영)
        t_squared (float): 최종 평가에 쓴 |T|²
        fisher (float): 그 점에서의 𝓕 (검증 평가)
        fisher_max (float): 시나리오의 최대 𝓕
        mean_photon_number (float): ⟨n⟩
        equal_photon_fisher (float): 같은 ⟨n⟩ 단일 코히런트의 최대 𝓕
        delta_theta_opt (float, optional): 이중 코히런트 보상 불일치
        t_squared_opt (Optimum, optional): 이중 코히런트 최적 투과율
        phi_opt (Optimum, optional): 차분 강도 검출 최적 내부 위상
        tr_squared_roots (List[float], optional): |TR|² 정류점
        kappa (KappaRegime, optional): κ 영역
        best_tau (List[float], optional): κ 영역이 주는 최적 τ
        delta_theta_lim (float, optional): 임계 불일치
        delta_theta_lim_approx (float, optional): 큰 |α| 근사
        fisher_at_threshold (float, optional): κ = 0 에서의 𝓕 (= B)
        matching_phases (Dict[str, float], optional): 최대를 주는 (θ, φ)
        kappa_root_delta_theta (float, optional): κ = 0 인 Δθ (시나리오 3)
        notes (List[str]): 해 없음 등 안내
    """
    model_config = ConfigDict(frozen=True)

    scenario: InputScenario
    t_squared: float
    fisher: float
    fisher_max: float
    mean_photon_number: float
    equal_photon_fisher: float
    delta_theta_opt: Optional[float] = None
    t_squared_opt: Optional[Optimum] = None
    phi_opt: Optional[Optimum] = None
    tr_squared_roots: Optional[List[float]] = None
    kappa: Optional[KappaRegime] = None
    best_tau: Optional[List[float]] = None
    delta_theta_lim: Optional[float] = None
    delta_theta_lim_approx: Optional[float] = None
    fisher_at_threshold: Optional[float] = None
    matching_phases: Optional[Dict[str, float]] = None
    kappa_root_delta_theta: Optional[float] = None
    notes: List[str] = Field(default_factory=list)
