import math
import logging

from app.core.exceptions import InsensitiveWorkingPointError, InvalidParameterError
from app.schemas.core import BeamSplitter, DualCoherent
from app.schemas.detection import DetectionPoint
from app.schemas.optimize import Optimum


logger = logging.getLogger(__name__)

# |분모| 가 이 값 이하이면 0 으로 본다
_ZERO = 1e-15



def _require_alpha(source: DualCoherent) -> float:
    a = source.alpha.magnitude
    if a <= 0.0:
        raise InvalidParameterError("difference-intensity detection needs |alpha| > 0")
    return a


def coefficient_cd(bs: BeamSplitter, source: DualCoherent) -> float:
    """
    sinφ 항의 계수 C_d = |TR|(1-ϖ²) + (1-2|T|²)ϖ sinΔθ.
    """
    w = source.varpi
    return bs.coupling * (1.0 - w * w) - bs.imbalance * w * math.sin(source.delta_theta)


def _slope(p: DetectionPoint) -> float:
    """C_d sinφ + ϖ cosΔθ cosφ"""
    w = p.source.varpi
    return (
        coefficient_cd(p.bs, p.source) * math.sin(p.phi)
        + w * math.cos(p.source.delta_theta) * math.cos(p.phi)
    )


def nd_mean(p: DetectionPoint) -> float:
    """
    차분 광전류 평균 ⟨N̂_d(φ)⟩.

    2|TR|(|α|²-|β|²)cosφ - 2|αβ|(|T|² sin(Δθ+φ) - |R|² sin(Δθ-φ))
    """
    a = p.source.alpha.magnitude
    b = p.source.beta.magnitude
    dt = p.source.delta_theta
    return (
        2.0 * p.bs.coupling * (a * a - b * b) * math.cos(p.phi)
        - 2.0 * a * b * (
            p.bs.transmissivity * math.sin(dt + p.phi) - p.bs.reflectivity * math.sin(dt - p.phi)
        )
    )


def nd_mean_derivative(p: DetectionPoint) -> float:
    """|∂⟨N̂_d⟩/∂φ| = 2|α|²·|C_d sinφ + ϖ cosΔθ cosφ|"""
    a = _require_alpha(p.source)
    return 2.0 * a * a * abs(_slope(p))


def nd_variance(p: DetectionPoint) -> float:
    """Var(N̂_d) = |α|²(1+ϖ²), φ 와 τ 에 무관."""
    return p.source.alpha.magnitude ** 2 + p.source.beta.magnitude ** 2


def delta_phi_diff(p: DetectionPoint) -> float:
    """
    오차 전파로 얻는 차분 강도 검출의 위상 감도.

    Δφ_diff = √(1+ϖ²) / (2|α|·|C_d sinφ + ϖ cosΔθ cosφ|)

    Args:
        p (DetectionPoint): 동작점

    Returns:
        float: Δφ_diff [rad]

    Raises:
        InsensitiveWorkingPointError: 분모가 0
    """
    a = _require_alpha(p.source)
    slope = abs(_slope(p))
    if slope <= _ZERO:
        raise InsensitiveWorkingPointError()
    return math.sqrt(1.0 + p.source.varpi ** 2) / (2.0 * a * slope)


def phi_opt(bs: BeamSplitter, source: DualCoherent) -> Optimum:
    """
    Δφ_diff 를 최소화하는 내부 위상 φ_opt = arctan(C_d / (ϖ cosΔθ)), 주값.

    φ 와 φ+π 는 같은 |기울기| 를 주므로 주값이 곧 최적이다.
    ϖ cosΔθ = 0 이면 sinφ 항만 남으므로 π/2 를 degenerate 로 반환한다.
    """
    _require_alpha(source)
    cd = coefficient_cd(bs, source)
    denominator = source.varpi * math.cos(source.delta_theta)
    if abs(denominator) <= _ZERO:
        logger.info("varpi*cos(delta_theta)=0; working point falls back to phi=pi/2")
        return Optimum(value=math.pi / 2.0, degenerate=True)
    return Optimum(value=math.atan(cd / denominator))
