import math
import logging

from typing import Optional, Tuple

import numpy as np

from scipy.optimize import brentq

from app.core.constants import Tolerance
from app.core.exceptions import DegenerateSplitterError, InvalidParameterError
from app.schemas.core import (
    BeamSplitter,
    CoherentSqueezedVacuum,
    DualCoherent,
    InputScenario,
    SqueezedCoherentSqueezedVacuum,
)
from app.schemas.optimize import KappaRegime, Optimum, Regime
from app.utils.closed_form import fisher_dual_coherent, kappa_and_floor, mean_photon_number


logger = logging.getLogger(__name__)

# 시나리오 3 κ 근 탐색 격자 (Δθ ∈ [0, π])
_KAPPA_ROOT_GRID = 721



# -----------------------------------------------------
# 1. 이중 코히런트 입력
# -----------------------------------------------------
def delta_theta_opt_dual(bs: BeamSplitter, varpi: float) -> Optional[float]:
    """
    주어진 BS1 에서 𝓕_max = |α|²(1+ϖ²) 를 회복하는 입력 위상 불일치.

    sinΔθ_opt = (|T|²-|R|²)(ϖ - 1/ϖ) / (4|TR|)  (출력 세기가 같아지는 조건)
    주값만 반환하며 2kπ 는 호출자가 더한다.

    Args:
        bs (BeamSplitter): 입력 빔 스플리터
        varpi (float): ϖ = |β|/|α| > 0

    Returns:
        Optional[float]: Δθ_opt [rad], 보상 가능한 불일치가 없으면 None

    Raises:
        InvalidParameterError: ϖ ≤ 0
        DegenerateSplitterError: |TR| = 0
    """
    if not varpi > 0.0:
        raise InvalidParameterError(f"varpi must be positive, got {varpi}")
    x = bs.coupling
    if x <= Tolerance.ALGEBRAIC_REL:
        raise DegenerateSplitterError()

    argument = bs.imbalance * (varpi - 1.0 / varpi) / (4.0 * x)
    if abs(argument) > 1.0:
        logger.info(f"no compensating mismatch for tau={bs.tau}, varpi={varpi} (sin={argument:.6g})")
        return None
    return math.asin(argument)


def t_opt_squared_dual(delta_theta: float, varpi: float) -> Optimum:
    """
    주어진 Δθ, ϖ 에서 𝓕 를 최대화하는 |T|².

    |T|²_opt = 1/2 + sign(ϖ²-1)·ϖ sinΔθ / √((1-ϖ²)² + 4ϖ² sin²Δθ)

    ϖ = 1 에서는 sign 이 0/0 이 되므로
    - sinΔθ ≠ 0: 후보 {1/2 + s/2, 1/2 - s/2, 1/2} (s = sign sinΔθ) 중 𝓕 최대값
    - sinΔθ = 0: 어떤 T 든 최대이므로 1/2 를 degenerate 로 반환

    Returns:
        Optimum: |T|²_opt
    """
    if varpi < 0.0:
        raise InvalidParameterError(f"varpi must be nonnegative, got {varpi}")

    u = math.sin(delta_theta)
    if varpi == 1.0:
        if abs(u) <= Tolerance.ALGEBRAIC_REL:
            logger.info("t_opt is degenerate at varpi=1, sin(delta_theta)=0; any transmission is optimal")
            return Optimum(value=0.5, degenerate=True)
        s = math.copysign(1.0, u)
        candidates = (0.5 + s / 2.0, 0.5 - s / 2.0, 0.5)
        source = DualCoherent.from_mismatch(alpha=1.0, beta=1.0, delta_theta=delta_theta)
        scores = [fisher_dual_coherent(BeamSplitter.from_transmissivity(t2), source) for t2 in candidates]
        best = candidates[int(np.argmax(scores))]
        logger.info(f"varpi=1 transmission tie resolved to |T|^2={best}")
        return Optimum(value=best)

    w2 = varpi * varpi
    sign = 1.0 if w2 > 1.0 else -1.0
    t2 = 0.5 + sign * varpi * u / math.sqrt((1.0 - w2) ** 2 + 4.0 * w2 * u * u)
    return Optimum(value=min(1.0, max(0.0, t2)))


def tr_squared_stationary_roots(delta_theta: float, varpi: float) -> Optional[Tuple[float, float]]:
    """
    d𝓕/d|TR| = 0 의 두 근 |TR|² (큰 값, 작은 값).

    x² = (1/8)(1 ± |g - h| / (g + h)),  g = (1-ϖ²)², h = 4ϖ² sin²Δθ
    g + h = 0 (ϖ = 1, sinΔθ = 0) 이면 𝓕 가 T 와 무관하므로 None.
    """
    g = (1.0 - varpi * varpi) ** 2
    h = 4.0 * varpi * varpi * math.sin(delta_theta) ** 2
    if g + h == 0.0:
        return None
    spread = abs(g - h) / (g + h)
    return (1.0 + spread) / 8.0, (1.0 - spread) / 8.0


def fisher_max_dual(source: DualCoherent) -> float:
    """𝓕_max = |α|² + |β|²"""
    return source.alpha.magnitude ** 2 + source.beta.magnitude ** 2


def fisher_equal_photons_dual(scenario: InputScenario) -> float:
    """
    같은 평균 광자수 ⟨n⟩ 를 갖는 단일 코히런트 입력의 최대 𝓕 (= ⟨n⟩).
    """
    return mean_photon_number(scenario)



# -----------------------------------------------------
# 2. 코히런트 + 스퀴즈드 진공
# -----------------------------------------------------
def _kappa_tolerance(source: CoherentSqueezedVacuum | SqueezedCoherentSqueezedVacuum) -> float:
    scale = 1.0 + source.alpha.magnitude ** 2 * math.cosh(2.0 * source.xi.r)
    if isinstance(source, SqueezedCoherentSqueezedVacuum):
        scale += math.cosh(2.0 * source.xi.r) * math.cosh(2.0 * source.zeta.r)
    return Tolerance.KAPPA_ZERO_REL * scale


def kappa_coh_sqz(source: CoherentSqueezedVacuum) -> KappaRegime:
    """
    𝓕 에서 4|TR|² 의 계수 κ 와 그 부호로 정해지는 영역.
    """
    kappa, _ = kappa_and_floor(source)
    return KappaRegime.classify(kappa, _kappa_tolerance(source))


def delta_theta_lim(source: CoherentSqueezedVacuum) -> Optional[float]:
    """
    κ(Δθ_lim) = 0 인 임계 불일치 Δθ_lim ∈ [0, π] (입력의 Δθ 는 무시).

    cosΔθ_lim = 2 sinh2r / (|α|² + sinh²(2r)/2) - cosh2r / sinh2r - sinh²r / (|α|² sinh2r)
    T 와 무관하며 이 각에서 𝓕 는 B 로 고정된다.

    Raises:
        InvalidParameterError: r = 0 또는 |α| = 0
    """
    a2 = source.alpha.magnitude ** 2
    r = source.xi.r
    if r <= 0.0 or a2 <= 0.0:
        raise InvalidParameterError("delta_theta_lim needs r > 0 and |alpha| > 0")

    sh2 = math.sinh(2.0 * r)
    cosine = 2.0 * sh2 / (a2 + sh2 * sh2 / 2.0) - math.cosh(2.0 * r) / sh2 - math.sinh(r) ** 2 / (a2 * sh2)
    if abs(cosine) > 1.0:
        logger.info(f"no threshold mismatch for |alpha|^2={a2}, r={r} (cos={cosine:.6g})")
        return None
    return math.acos(cosine)


def delta_theta_lim_approx(source: CoherentSqueezedVacuum) -> Optional[float]:
    """
    |α|² ≫ sinh²r 근사: cosΔθ_lim ≈ 2 sinh2r / |α|² - cosh2r / sinh2r.

    근사값이므로 검증 기준으로 쓰지 않는다.
    """
    a2 = source.alpha.magnitude ** 2
    r = source.xi.r
    if r <= 0.0 or a2 <= 0.0:
        raise InvalidParameterError("delta_theta_lim_approx needs r > 0 and |alpha| > 0")

    sh2 = math.sinh(2.0 * r)
    cosine = 2.0 * sh2 / a2 - math.cosh(2.0 * r) / sh2
    if abs(cosine) > 1.0:
        return None
    return math.acos(cosine)


def fisher_max_coh_sqz(source: CoherentSqueezedVacuum) -> float:
    """𝓕_max = |α|²e^{2r} + sinh²r  (balanced, Δθ = 0)"""
    r = source.xi.r
    return source.alpha.magnitude ** 2 * math.exp(2.0 * r) + math.sinh(r) ** 2


def best_transmission(regime: KappaRegime) -> Tuple[float, ...]:
    """
    κ 영역별로 𝓕 를 최대화하는 τ 값들.

    - BALANCED_OPTIMAL: (π/4,)
    - DEGENERATE_OPTIMAL: (0, π/2)
    - TRANSMISSION_INDEPENDENT: 모든 τ 가 같으므로 대표값 (0, π/4, π/2)
    """
    if regime.regime is Regime.BALANCED_OPTIMAL:
        return (math.pi / 4.0,)
    if regime.regime is Regime.DEGENERATE_OPTIMAL:
        return (0.0, math.pi / 2.0)
    return (0.0, math.pi / 4.0, math.pi / 2.0)



# -----------------------------------------------------
# 3. 스퀴즈드 코히런트 + 스퀴즈드 진공
# -----------------------------------------------------
def kappa_sqzcoh_sqz(source: SqueezedCoherentSqueezedVacuum) -> KappaRegime:
    kappa, _ = kappa_and_floor(source)
    return KappaRegime.classify(kappa, _kappa_tolerance(source))


def fisher_max_sqzcoh_sqz(source: SqueezedCoherentSqueezedVacuum) -> float:
    """𝓕_max = |α|²e^{2r} + sinh²(r+z)  (balanced, 2θ_α-θ = 0, 2θ_α-φ = π, φ-θ = π)"""
    r = source.xi.r
    z = source.zeta.r
    return source.alpha.magnitude ** 2 * math.exp(2.0 * r) + math.sinh(r + z) ** 2


def matching_phases_sqzcoh_sqz(alpha_phase: float = 0.0) -> Tuple[float, float]:
    """
    𝓕_max 를 주는 스퀴징 각 (θ, φ). 두 스퀴징은 서로 역위상이다.
    """
    theta = 2.0 * alpha_phase
    return theta, theta - math.pi


def delta_theta_lim_sqzcoh_sqz(source: SqueezedCoherentSqueezedVacuum) -> Optional[float]:
    """
    θ_α, φ, |α|, r, z 를 고정하고 Δθ = 2θ_α - θ ∈ [0, π] 에서 κ = 0 인 근.

    κ = 0 인 조합은 무수히 많으므로 자유 변수 하나(Δθ)에 대한 수치 근만 제공한다.
    격자에서 첫 부호 변화를 찾은 뒤 brentq 로 정밀화한다.

    Returns:
        Optional[float]: Δθ [rad], 부호 변화가 없으면 None
    """
    def kappa_at(delta: float) -> float:
        shifted = source.model_copy(
            update={"xi": source.xi.model_copy(update={"angle": 2.0 * source.alpha.phase - delta})}
        )
        return kappa_and_floor(shifted)[0]

    grid = np.linspace(0.0, math.pi, _KAPPA_ROOT_GRID)
    values = np.array([kappa_at(float(delta)) for delta in grid])
    tolerance = _kappa_tolerance(source)

    for i in range(len(grid) - 1):
        if abs(values[i]) <= tolerance:
            return float(grid[i])
        if values[i] * values[i + 1] < 0.0:
            root = brentq(kappa_at, float(grid[i]), float(grid[i + 1]), xtol=1e-14, rtol=4 * np.finfo(float).eps)
            logger.debug(f"kappa root bracketed in [{grid[i]:.6g}, {grid[i + 1]:.6g}] -> {root:.12g}")
            return float(root)
    if abs(values[-1]) <= tolerance:
        return float(grid[-1])

    logger.info("kappa keeps its sign over delta_theta in [0, pi]; no transmission-independent point")
    return None
