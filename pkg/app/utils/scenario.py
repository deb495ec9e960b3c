from typing import Dict, Mapping

from app.core.exceptions import InvalidParameterError
from app.schemas.core import (
    CoherentAmplitude,
    CoherentSqueezedVacuum,
    DualCoherent,
    InputScenario,
    SqueezeParam,
    SqueezedCoherentSqueezedVacuum,
)


# 시나리오를 평탄한 파라미터로 표현할 때 허용되는 키
SCENARIO_KEYS = ("alpha", "alpha_phase", "beta", "beta_phase", "r", "theta", "z", "phi", "delta_theta")



def scenario_params(scenario: InputScenario) -> Dict[str, float]:
    """시나리오 → 평탄한 파라미터 dict (delta_theta 는 넣지 않음)."""
    params = {"alpha": scenario.alpha.magnitude, "alpha_phase": scenario.alpha.phase}
    if isinstance(scenario, DualCoherent):
        params.update(beta=scenario.beta.magnitude, beta_phase=scenario.beta.phase)
    else:
        params.update(r=scenario.xi.r, theta=scenario.xi.angle)
    if isinstance(scenario, SqueezedCoherentSqueezedVacuum):
        params.update(z=scenario.zeta.r, phi=scenario.zeta.angle)
    return params


def build_scenario(kind: str, params: Mapping[str, float]) -> InputScenario:
    """
    평탄한 파라미터 dict → 시나리오.

    delta_theta 가 있으면 다른 각보다 우선한다.
    - 이중 코히런트: θ_β = θ_α - Δθ
    - 스퀴징 시나리오: θ = 2θ_α - Δθ

    종류에 없는 키(예: 이중 코히런트의 r)는 무시한다.

    Raises:
        InvalidParameterError: 알 수 없는 키 또는 종류
    """
    unknown = sorted(set(params) - set(SCENARIO_KEYS))
    if unknown:
        raise InvalidParameterError(f"unknown scenario parameter(s): {', '.join(unknown)}")

    alpha_phase = params.get("alpha_phase", 0.0)
    alpha = CoherentAmplitude(magnitude=params.get("alpha", 0.0), phase=alpha_phase)
    delta_theta = params.get("delta_theta")

    if kind == "dual_coherent":
        beta_phase = params.get("beta_phase", 0.0) if delta_theta is None else alpha_phase - delta_theta
        return DualCoherent(alpha=alpha, beta=CoherentAmplitude(magnitude=params.get("beta", 0.0), phase=beta_phase))

    theta = params.get("theta", 0.0) if delta_theta is None else 2.0 * alpha_phase - delta_theta
    xi = SqueezeParam(r=params.get("r", 0.0), angle=theta)
    if kind == "coh_sqz":
        return CoherentSqueezedVacuum(alpha=alpha, xi=xi)
    if kind == "sqzcoh_sqz":
        zeta = SqueezeParam(r=params.get("z", 0.0), angle=params.get("phi", 0.0))
        return SqueezedCoherentSqueezedVacuum(alpha=alpha, zeta=zeta, xi=xi)
    raise InvalidParameterError(f"unknown scenario kind: {kind}")
