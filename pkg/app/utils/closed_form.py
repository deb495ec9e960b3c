import math

from typing import Tuple

from app.core.exceptions import NoInformationError
from app.schemas.core import (
    BeamSplitter,
    CoherentSqueezedVacuum,
    DualCoherent,
    FisherMatrix,
    InputScenario,
    SqueezedCoherentSqueezedVacuum,
)
from app.utils.fisher import reduce_fisher





# -----------------------------------------------------
# 1. 이중 코히런트 입력 |α⟩₁|β⟩₀
# -----------------------------------------------------
def output_intensities_dual(bs: BeamSplitter, source: DualCoherent) -> Tuple[float, float]:
    """
    BS1 이후 출력 모드 세기 (⟨n̂₂⟩, ⟨n̂₃⟩) = (|Rα+Tβ|², |Tα+Rβ|²).
    """
    alpha = source.alpha.value
    beta = source.beta.value
    return abs(bs.r * alpha + bs.t * beta) ** 2, abs(bs.t * alpha + bs.r * beta) ** 2


def fisher_matrix_dual_coherent(bs: BeamSplitter, source: DualCoherent) -> FisherMatrix:
    """
    이중 코히런트 입력의 Fisher 행렬.

    - 𝔉_ss = 𝔉_dd = |α|² + |β|²
    - 𝔉_sd = 𝔉_ds = |Rα+Tβ|² - |Tα+Rβ|²
    """
    total = source.alpha.magnitude ** 2 + source.beta.magnitude ** 2
    n_2, n_3 = output_intensities_dual(bs, source)
    return FisherMatrix.symmetric(ss=total, sd=n_2 - n_3, dd=total)


def fisher_dual_coherent(bs: BeamSplitter, source: DualCoherent) -> float:
    """
    이중 코히런트 입력의 Fisher 정보 𝓕 (ϖ = |β|/|α| 전개식).

    |α| = 0 이면 α↔β, τ→π/2-τ 대칭으로 평가하며 결과는 4|β|²|TR|².

    Args:
        bs (BeamSplitter): 입력 빔 스플리터
        source (DualCoherent): 입력 상태

    Returns:
        float: 𝓕

    Raises:
        NoInformationError: |α| = |β| = 0
    """
    a = source.alpha.magnitude
    b = source.beta.magnitude
    if a == 0.0 and b == 0.0:
        raise NoInformationError()

    x = bs.coupling
    if a == 0.0:
        return 4.0 * b * b * x * x

    w2 = source.varpi ** 2
    w = math.sqrt(w2)
    u = math.sin(source.delta_theta)
    d = bs.imbalance
    return 4.0 * a * a * (
        x * x * (1.0 + w2)
        - 4.0 * x * x * w2 * (1.0 + u * u) / (1.0 + w2)
        + w2 / (1.0 + w2)
        - 2.0 * x * d * w * (1.0 - w2) * u / (1.0 + w2)
    )


def fisher_dual_coherent_compact(bs: BeamSplitter, source: DualCoherent) -> float:
    """𝓕 = 4|Rα+Tβ|²|Tα+Rβ|² / (|α|²+|β|²)"""
    total = source.alpha.magnitude ** 2 + source.beta.magnitude ** 2
    if total == 0.0:
        raise NoInformationError()
    n_2, n_3 = output_intensities_dual(bs, source)
    return 4.0 * n_2 * n_3 / total


def fisher_dual_coherent_balanced(source: DualCoherent) -> float:
    """
    balanced BS1 에서의 𝓕 = |α|²(1 + ϖ² - 4ϖ² sin²Δθ / (1+ϖ²)).
    """
    a = source.alpha.magnitude
    b = source.beta.magnitude
    if a == 0.0:
        if b == 0.0:
            raise NoInformationError()
        return b * b
    w2 = source.varpi ** 2
    u = math.sin(source.delta_theta)
    return a * a * (1.0 + w2 - 4.0 * w2 * u * u / (1.0 + w2))



# -----------------------------------------------------
# 2. 코히런트 + 스퀴즈드 진공 D̂₁(α)Ŝ₀(ξ)|0⟩
# -----------------------------------------------------
def _balanced_term_coh_sqz(source: CoherentSqueezedVacuum) -> float:
    """|α|²(sinh2r cosΔθ + cosh2r) + sinh²r  (balanced 𝓕 와 같음)"""
    a2 = source.alpha.magnitude ** 2
    r = source.xi.r
    return a2 * (math.sinh(2.0 * r) * math.cos(source.delta_theta) + math.cosh(2.0 * r)) + math.sinh(r) ** 2


def fisher_matrix_coh_sqz(bs: BeamSplitter, source: CoherentSqueezedVacuum) -> FisherMatrix:
    """
    코히런트 + 스퀴즈드 진공 입력의 Fisher 행렬.

    - 𝔉_ss = |α|² + sinh²(2r)/2
    - 𝔉_dd = (|T|²-|R|²)²(|α|² + sinh²(2r)/2) + 4|TR|²·(balanced 항)
    - 𝔉_sd = 𝔉_ds = (|T|²-|R|²)(sinh²(2r)/2 - |α|²)
    """
    a2 = source.alpha.magnitude ** 2
    half_s = math.sinh(2.0 * source.xi.r) ** 2 / 2.0
    d = bs.imbalance
    x = bs.coupling
    return FisherMatrix.symmetric(
        ss=a2 + half_s,
        sd=d * (half_s - a2),
        dd=d * d * (a2 + half_s) + 4.0 * x * x * _balanced_term_coh_sqz(source),
    )


def fisher_coh_sqz(bs: BeamSplitter, source: CoherentSqueezedVacuum) -> float:
    """
    𝓕 = 4|TR|²·κ + B.

    Raises:
        NoInformationError: |α| = 0 이고 r = 0
    """
    kappa, floor = kappa_and_floor(source)
    x = bs.coupling
    return 4.0 * x * x * kappa + floor


def fisher_coh_sqz_balanced(source: CoherentSqueezedVacuum) -> float:
    return _balanced_term_coh_sqz(source)



# -----------------------------------------------------
# 3. 스퀴즈드 코히런트 + 스퀴즈드 진공 Ŝ₀(ξ)D̂₁(α)Ŝ₁(ζ)|0⟩
# -----------------------------------------------------
def _port_terms_sqzcoh_sqz(source: SqueezedCoherentSqueezedVacuum) -> Tuple[float, float]:
    """
    (P, Q): 포트 0 / 포트 1 이 𝔉_ss 에 기여하는 항.

    - P = sinh²(2r)/2
    - Q = sinh²(2z)/2 + |α|²(cosh2z - sinh2z cosΔφ)
    """
    z = source.zeta.r
    p = math.sinh(2.0 * source.xi.r) ** 2 / 2.0
    q = math.sinh(2.0 * z) ** 2 / 2.0 + source.alpha.magnitude ** 2 * (
        math.cosh(2.0 * z) - math.sinh(2.0 * z) * math.cos(source.delta_phi)
    )
    return p, q


def _balanced_term_sqzcoh_sqz(source: SqueezedCoherentSqueezedVacuum) -> float:
    """balanced 𝓕 (= 4|TR|² 계수의 첫 항)"""
    a2 = source.alpha.magnitude ** 2
    r = source.xi.r
    z = source.zeta.r
    sh_r, ch_r = math.sinh(r), math.cosh(r)
    sh_z, ch_z = math.sinh(z), math.cosh(z)
    return (
        a2 * (math.cosh(2.0 * r) + math.sinh(2.0 * r) * math.cos(source.delta_theta))
        + sh_r ** 2
        + sh_z ** 2
        + 2.0 * sh_r * sh_z * (sh_r * sh_z - ch_r * ch_z * math.cos(source.squeeze_offset))
    )


def fisher_matrix_sqzcoh_sqz(bs: BeamSplitter, source: SqueezedCoherentSqueezedVacuum) -> FisherMatrix:
    """
    스퀴즈드 코히런트 + 스퀴즈드 진공 입력의 Fisher 행렬.

    - 𝔉_ss = P + Q
    - 𝔉_sd = 𝔉_ds = (|T|²-|R|²)(P - Q)
    - 𝔉_dd = (|T|²-|R|²)²(P + Q) + 4|TR|²·(balanced 항)
    """
    p, q = _port_terms_sqzcoh_sqz(source)
    d = bs.imbalance
    x = bs.coupling
    return FisherMatrix.symmetric(
        ss=p + q,
        sd=d * (p - q),
        dd=d * d * (p + q) + 4.0 * x * x * _balanced_term_sqzcoh_sqz(source),
    )


def fisher_sqzcoh_sqz(bs: BeamSplitter, source: SqueezedCoherentSqueezedVacuum) -> float:
    """
    𝓕 = 4|TR|²·κ + B.

    Raises:
        NoInformationError: 세 입력이 모두 진공
    """
    kappa, floor = kappa_and_floor(source)
    x = bs.coupling
    return 4.0 * x * x * kappa + floor


def fisher_sqzcoh_sqz_balanced(source: SqueezedCoherentSqueezedVacuum) -> float:
    return _balanced_term_sqzcoh_sqz(source)



# -----------------------------------------------------
# 4. κ + B 분해 (스퀴징 시나리오 공용)
# -----------------------------------------------------
def kappa_and_floor(source: CoherentSqueezedVacuum | SqueezedCoherentSqueezedVacuum) -> Tuple[float, float]:
    """
    𝓕 = 4|TR|²·κ + B 로 쓸 때의 (κ, B).

    B 는 T 와 무관한 항이며 κ = 0 에서 𝓕 = B 가 된다.
    포트 기여 (P, Q) 에 대해 B = 4PQ/(P+Q), κ = (balanced 항) - B.

    Raises:
        NoInformationError: P + Q = 0
    """
    if isinstance(source, CoherentSqueezedVacuum):
        p = math.sinh(2.0 * source.xi.r) ** 2 / 2.0
        q = source.alpha.magnitude ** 2
        balanced = _balanced_term_coh_sqz(source)
    else:
        p, q = _port_terms_sqzcoh_sqz(source)
        balanced = _balanced_term_sqzcoh_sqz(source)

    if p + q <= 0.0:
        raise NoInformationError()
    floor = 4.0 * p * q / (p + q)
    return balanced - floor, floor


def transmission_independent_fisher(source: CoherentSqueezedVacuum | SqueezedCoherentSqueezedVacuum) -> float:
    """κ = 0 일 때 T 와 무관하게 얻어지는 𝓕 (= B)."""
    return kappa_and_floor(source)[1]



# -----------------------------------------------------
# 5. 시나리오 공통 진입점
# -----------------------------------------------------
def fisher_matrix(bs: BeamSplitter, scenario: InputScenario) -> FisherMatrix:
    if isinstance(scenario, DualCoherent):
        return fisher_matrix_dual_coherent(bs, scenario)
    if isinstance(scenario, CoherentSqueezedVacuum):
        return fisher_matrix_coh_sqz(bs, scenario)
    return fisher_matrix_sqzcoh_sqz(bs, scenario)


def fisher(bs: BeamSplitter, scenario: InputScenario) -> float:
    """시나리오 종류에 맞는 닫힌 형태 𝓕."""
    if isinstance(scenario, DualCoherent):
        return fisher_dual_coherent(bs, scenario)
    if isinstance(scenario, CoherentSqueezedVacuum):
        return fisher_coh_sqz(bs, scenario)
    return fisher_sqzcoh_sqz(bs, scenario)


def fisher_via_matrix(bs: BeamSplitter, scenario: InputScenario) -> float:
    """행렬을 만든 뒤 축약해서 얻는 𝓕 (분해식과의 교차 검증용)."""
    return reduce_fisher(fisher_matrix(bs, scenario))


def mean_photon_number(scenario: InputScenario) -> float:
    """
    입력 평균 광자수 ⟨n⟩ (BS1 은 광자수를 보존).

    - 이중 코히런트: |α|² + |β|²
    - 코히런트 + 스퀴즈드 진공: |α|² + sinh²r
    - 스퀴즈드 코히런트 + 스퀴즈드 진공: |α|² + sinh²r + sinh²z
    """
    a2 = scenario.alpha.magnitude ** 2
    if isinstance(scenario, DualCoherent):
        return a2 + scenario.beta.magnitude ** 2
    if isinstance(scenario, CoherentSqueezedVacuum):
        return a2 + math.sinh(scenario.xi.r) ** 2
    return a2 + math.sinh(scenario.xi.r) ** 2 + math.sinh(scenario.zeta.r) ** 2
