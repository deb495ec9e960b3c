from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.constants import OracleLimit



class Envelope(BaseModel):
    """
    오라클 검증 추첨 범위. 상한은 run_verify 가 오라클 지원 범위와 비교한다.

    Attributes:
        alpha_max (float): |α| 상한
        varpi_max (float): ϖ = |β|/|α| 상한 (이중 코히런트)
        r_max, z_max (float): 스퀴징 인자 상한
        cutoff (int): Fock 절단. 생략하면 |α| ≤ 1, r, z ≤ 0.3 에서 40, 그 밖에서는 60
    """
    model_config = ConfigDict(frozen=True)

    alpha_max: float = Field(OracleLimit.ALPHA_MAX, ge=0.0)
    varpi_max: float = Field(OracleLimit.VARPI_MAX, ge=0.0)
    r_max: float = Field(OracleLimit.SQUEEZE_MAX, ge=0.0)
    z_max: float = Field(OracleLimit.SQUEEZE_MAX, ge=0.0)
    cutoff: int = Field(OracleLimit.BOUNDARY_CUTOFF, ge=OracleLimit.MIN_CUTOFF)

    @model_validator(mode="before")
    @classmethod
    def default_cutoff(cls, data: Any) -> Any:
        if not isinstance(data, dict) or data.get("cutoff") is not None:
            return data
        small = (
            data.get("alpha_max", OracleLimit.ALPHA_MAX) <= OracleLimit.SMALL_ALPHA_MAX
            and data.get("r_max", OracleLimit.SQUEEZE_MAX) <= OracleLimit.SMALL_SQUEEZE_MAX
            and data.get("z_max", OracleLimit.SQUEEZE_MAX) <= OracleLimit.SMALL_SQUEEZE_MAX
        )
        cutoff = OracleLimit.DEFAULT_CUTOFF if small else OracleLimit.BOUNDARY_CUTOFF
        return {**data, "cutoff": cutoff}


class DrawResult(BaseModel):
    """
    Attributes:
        kind (str): 시나리오 종류
        index (int): 시나리오 내 추첨 순번
        params (Dict[str, float]): tau 와 시나리오 파라미터
        max_error (float): 네 원소 중 최대 정규화 오차
        passed (bool): max_error ≤ 1e-6
    """
    model_config = ConfigDict(frozen=True)

    kind: str
    index: int
    params: Dict[str, float]
    max_error: float
    passed: bool


class VerifyReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    envelope: Envelope
    n_draws: int
    seed: int
    worst_error: float
    passed: bool
    draws: List[DrawResult] = Field(default_factory=list)
