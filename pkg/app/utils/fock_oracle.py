"""
절단된 Fock 기저에서 BS1 이후 두 모드 상태를 직접 만들어
Fisher 행렬과 관측량 모멘트를 계산하는 검증용 엔진.

- 슬롯 0 / 1 은 BS1 이전에는 입력 포트 0 / 1, 이후에는 출력 모드 2 / 3
- 빔 스플리터는 광자수 보존 섹터 N 마다 tridiagonal 생성자의 고유분해로 적용
"""
import math
import logging

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

from scipy.linalg import eigh_tridiagonal

from app.core.constants import OracleLimit, Tolerance
from app.core.exceptions import CutoffTooSmallError, InvalidParameterError
from app.schemas.core import (
    BeamSplitter,
    CoherentAmplitude,
    CoherentSqueezedVacuum,
    DualCoherent,
    FisherMatrix,
    InputScenario,
    PhaseConfig,
    SqueezeParam,
)


logger = logging.getLogger(__name__)



# -----------------------------------------------------
# 1. 상태 타입
# -----------------------------------------------------
@dataclass(frozen=True)
class SingleModeState:
    """
    단일 모드 Fock 진폭 c_n, n = 0..cutoff.

    Attributes:
        amplitudes (np.ndarray): complex, shape (cutoff+1,)
    """
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes.setflags(write=False)

    @property
    def cutoff(self) -> int:
        return self.amplitudes.shape[0] - 1

    @property
    def norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def mean_photon_number(self) -> float:
        n = np.arange(self.cutoff + 1)
        return float(np.sum(n * np.abs(self.amplitudes) ** 2))


@dataclass(frozen=True)
class TwoModeState:
    """
    두 모드 Fock 진폭 ψ[n₀, n₁].

    Attributes:
        amplitudes (np.ndarray): complex, shape (cutoff+1, cutoff+1)
    """
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes.setflags(write=False)

    @property
    def cutoff(self) -> int:
        return self.amplitudes.shape[0] - 1

    @property
    def norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2



# -----------------------------------------------------
# 2. 단일 모드 상태 생성
# -----------------------------------------------------
def _check_cutoff(cutoff: int) -> None:
    if cutoff < OracleLimit.MIN_CUTOFF:
        raise InvalidParameterError(f"cutoff must be at least {OracleLimit.MIN_CUTOFF}, got {cutoff}")


def _checked(amplitudes: np.ndarray, label: str) -> SingleModeState:
    """꼬리 질량과 노름 결손이 허용치 안인지 확인."""
    probabilities = np.abs(amplitudes) ** 2
    tail = float(np.sum(probabilities[-OracleLimit.TAIL_WINDOW:]))
    deficit = 1.0 - float(np.sum(probabilities))
    if tail > Tolerance.TAIL or deficit > Tolerance.TAIL:
        raise CutoffTooSmallError(
            f"cutoff too small for {label}: tail={tail:.3g}, norm deficit={deficit:.3g} "
            f"at cutoff {amplitudes.shape[0] - 1}"
        )
    return SingleModeState(amplitudes=amplitudes)


def build_coherent(alpha: CoherentAmplitude, cutoff: int) -> SingleModeState:
    """
    코히런트 상태 c_n = e^{-|α|²/2} αⁿ/√n!.

    Raises:
        CutoffTooSmallError: 꼬리 질량이 허용치를 넘음
    """
    _check_cutoff(cutoff)
    value = alpha.value
    amplitudes = np.zeros(cutoff + 1, dtype=complex)
    amplitudes[0] = math.exp(-alpha.magnitude ** 2 / 2.0)
    for n in range(cutoff):
        amplitudes[n + 1] = amplitudes[n] * value / math.sqrt(n + 1)
    return _checked(amplitudes, f"coherent |alpha|={alpha.magnitude}")


def build_squeezed_coherent(alpha: CoherentAmplitude, zeta: SqueezeParam, cutoff: int) -> SingleModeState:
    """
    변위된 스퀴즈드 진공 D̂(α)Ŝ(ζ)|0⟩ (스퀴징 후 변위).

    Ŝ(ζ) = exp[(ζ*â² - ζâ†²)/2] 관례에서 상태는
    (μâ + νâ† - γ)|ψ⟩ = 0  (μ = cosh z, ν = e^{iφ}sinh z, γ = μα + να*)
    을 만족하므로 3항 점화식으로 계수를 얻는다.

        c_{n+1} = (γ c_n - ν √n c_{n-1}) / (μ √(n+1))
        c_0 = (cosh z)^{-1/2} exp(-|α|²/2 - α*² e^{iφ} tanh z / 2)

    α = 0 이면 포트 0 의 스퀴즈드 진공 Ŝ(ξ)|0⟩.

    Raises:
        CutoffTooSmallError: 꼬리 질량이 허용치를 넘음
    """
    _check_cutoff(cutoff)
    a = alpha.value
    phase = complex(math.cos(zeta.angle), math.sin(zeta.angle))
    mu = math.cosh(zeta.r)
    nu = phase * math.sinh(zeta.r)
    gamma = mu * a + nu * a.conjugate()

    amplitudes = np.zeros(cutoff + 1, dtype=complex)
    amplitudes[0] = np.exp(
        -alpha.magnitude ** 2 / 2.0 - a.conjugate() ** 2 * phase * math.tanh(zeta.r) / 2.0
    ) / math.sqrt(mu)
    amplitudes[1] = gamma * amplitudes[0] / mu
    for n in range(1, cutoff):
        amplitudes[n + 1] = (gamma * amplitudes[n] - nu * math.sqrt(n) * amplitudes[n - 1]) / (mu * math.sqrt(n + 1))
    return _checked(amplitudes, f"squeezed coherent |alpha|={alpha.magnitude}, r={zeta.r}")



# -----------------------------------------------------
# 3. 빔 스플리터 (광자수 섹터별 회전)
# -----------------------------------------------------
@lru_cache(maxsize=None)
def _sector_eigensystem(total: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    섹터 N 의 생성자 â₀†â₁ + â₁†â₀ 고유분해, 기저 |k, N-k⟩.
    """
    k = np.arange(total, dtype=float)
    off_diagonal = np.sqrt((k + 1.0) * (total - k))
    eigenvalues, eigenvectors = eigh_tridiagonal(np.zeros(total + 1), off_diagonal)
    eigenvalues.setflags(write=False)
    eigenvectors.setflags(write=False)
    return eigenvalues, eigenvectors


def _mix(amplitudes: np.ndarray, tau: float) -> np.ndarray:
    """
    exp(iτ(â₀†â₁ + â₁†â₀)) 를 N ≤ cutoff 섹터에 적용.

    â₀† → cos τ â₀† + i sin τ â₁†,  â₁† → i sin τ â₀† + cos τ â₁†
    """
    cutoff = amplitudes.shape[0] - 1
    out = np.zeros_like(amplitudes)
    for total in range(cutoff + 1):
        rows = np.arange(total + 1)
        cols = total - rows
        eigenvalues, eigenvectors = _sector_eigensystem(total)
        unitary = (eigenvectors * np.exp(1j * tau * eigenvalues)) @ eigenvectors.T
        out[rows, cols] = unitary @ amplitudes[rows, cols]
    return out


def _dropped_mass(amplitudes: np.ndarray) -> float:
    """섹터 N > cutoff 에 있는 확률 (회전 대상에서 빠짐)."""
    cutoff = amplitudes.shape[0] - 1
    n = np.arange(cutoff + 1)
    outside = (n[:, None] + n[None, :]) > cutoff
    return float(np.sum(np.abs(amplitudes[outside]) ** 2))


def _check_two_mode(before: np.ndarray, after: np.ndarray) -> None:
    dropped = _dropped_mass(before)
    if dropped > Tolerance.TAIL:
        raise CutoffTooSmallError(f"cutoff too small: {dropped:.3g} of the input lies above the photon-number cutoff")

    kept = float(np.sum(np.abs(before) ** 2)) - dropped
    drift = abs(float(np.sum(np.abs(after) ** 2)) - kept)
    if drift > Tolerance.NORM:
        raise ArithmeticError(f"beam splitter is not norm preserving (drift={drift:.3g})")

    window = OracleLimit.TAIL_WINDOW
    probabilities = np.abs(after) ** 2
    edge = float(np.sum(probabilities[-window:, :]) + np.sum(probabilities[:-window, -window:]))
    if edge > Tolerance.TAIL:
        raise CutoffTooSmallError(f"cutoff too small: output tail mass {edge:.3g}")


def apply_beam_splitter(in0: SingleModeState, in1: SingleModeState, bs: BeamSplitter) -> TwoModeState:
    """
    |ψ₂₃⟩ = U_BS (|in0⟩ ⊗ |in1⟩).

    출력 모드 연산자로 â₂ = Tâ₀ + Râ₁, â₃ = Râ₀ + Tâ₁ 이 되도록 한다.

    Args:
        in0 (SingleModeState): 포트 0 상태
        in1 (SingleModeState): 포트 1 상태
        bs (BeamSplitter): BS1

    Returns:
        TwoModeState: 출력 모드 (2, 3) 의 진폭

    Raises:
        InvalidParameterError: 두 상태의 cutoff 불일치
        CutoffTooSmallError: 절단으로 잃는 질량이 허용치를 넘음
    """
    if in0.cutoff != in1.cutoff:
        raise InvalidParameterError(f"cutoff mismatch: {in0.cutoff} != {in1.cutoff}")

    product = np.outer(in0.amplitudes, in1.amplitudes)
    mixed = _mix(product, bs.tau)
    _check_two_mode(product, mixed)
    logger.debug(f"beam splitter applied at tau={bs.tau:.6g}, cutoff={in0.cutoff}")
    return TwoModeState(amplitudes=mixed)


def invert_beam_splitter(psi23: TwoModeState, bs: BeamSplitter) -> TwoModeState:
    """U_BS† 적용 (출력 모드 → 입력 포트)."""
    return TwoModeState(amplitudes=_mix(np.array(psi23.amplitudes), -bs.tau))


def apply_phase_shifts(psi23: TwoModeState, phases: PhaseConfig) -> TwoModeState:
    """
    |ψ_φ⟩ = exp(-i(n̂₂-n̂₃)φ_d/2) exp(-i(n̂₂+n̂₃)φ_s/2) |ψ₂₃⟩
    """
    n = np.arange(psi23.cutoff + 1)
    m2, m3 = n[:, None], n[None, :]
    exponent = -0.5j * ((m2 + m3) * phases.phi_s + (m2 - m3) * phases.phi_d)
    return TwoModeState(amplitudes=psi23.amplitudes * np.exp(exponent))


def prepare_output_state(bs: BeamSplitter, scenario: InputScenario, cutoff: int) -> TwoModeState:
    """
    시나리오 입력을 포트별로 만들고 BS1 을 적용한다.

    - 이중 코히런트: 포트 0 = |β⟩, 포트 1 = |α⟩
    - 코히런트 + 스퀴즈드 진공: 포트 0 = Ŝ(ξ)|0⟩, 포트 1 = |α⟩
    - 스퀴즈드 코히런트 + 스퀴즈드 진공: 포트 0 = Ŝ(ξ)|0⟩, 포트 1 = D̂(α)Ŝ(ζ)|0⟩
    """
    if isinstance(scenario, DualCoherent):
        in0 = build_coherent(scenario.beta, cutoff)
        in1 = build_coherent(scenario.alpha, cutoff)
    elif isinstance(scenario, CoherentSqueezedVacuum):
        in0 = build_squeezed_coherent(CoherentAmplitude(), scenario.xi, cutoff)
        in1 = build_coherent(scenario.alpha, cutoff)
    else:
        in0 = build_squeezed_coherent(CoherentAmplitude(), scenario.xi, cutoff)
        in1 = build_squeezed_coherent(scenario.alpha, scenario.zeta, cutoff)
    return apply_beam_splitter(in0, in1, bs)



# -----------------------------------------------------
# 4. Fisher 행렬과 관측량
# -----------------------------------------------------
def mean_photon_numbers(psi23: TwoModeState) -> Tuple[float, float]:
    """(⟨n̂₂⟩, ⟨n̂₃⟩)"""
    probabilities = psi23.probabilities()
    n = np.arange(psi23.cutoff + 1)
    return float(np.sum(probabilities.sum(axis=1) * n)), float(np.sum(probabilities.sum(axis=0) * n))


def fisher_matrix_numeric(psi23: TwoModeState) -> FisherMatrix:
    """
    생성자 공분산으로 계산한 Fisher 행렬 𝔉_ij = 4 Cov(G_i, G_j).

    G_s = (n̂₂+n̂₃)/2, G_d = (n̂₂-n̂₃)/2 는 Fock 기저에서 대각이므로
    |ψ₂₃|² 가중합으로 끝난다. 위상 진화와 무관하다.
    """
    probabilities = psi23.probabilities()
    probabilities = probabilities / probabilities.sum()
    n = np.arange(psi23.cutoff + 1, dtype=float)
    g_s = (n[:, None] + n[None, :]) / 2.0
    g_d = (n[:, None] - n[None, :]) / 2.0

    mean_s = float(np.sum(probabilities * g_s))
    mean_d = float(np.sum(probabilities * g_d))
    ss = 4.0 * float(np.sum(probabilities * (g_s - mean_s) ** 2))
    dd = 4.0 * float(np.sum(probabilities * (g_d - mean_d) ** 2))
    sd = 4.0 * float(np.sum(probabilities * (g_s - mean_s) * (g_d - mean_d)))
    return FisherMatrix.symmetric(ss=ss, sd=sd, dd=dd)


def _apply_nd(amplitudes: np.ndarray, phi: float) -> np.ndarray:
    """
    N̂_d(φ) = i(e^{iφ} â₂†â₃ - e^{-iφ} â₃†â₂) 의 작용.

    (â₂†â₃ψ)[m₂, m₃] = √(m₂(m₃+1)) ψ[m₂-1, m₃+1]
    """
    cutoff = amplitudes.shape[0] - 1
    n = np.arange(cutoff + 1, dtype=float)

    raise_2 = np.zeros_like(amplitudes)
    raise_2[1:, :-1] = np.sqrt(n[1:, None] * (n[None, :-1] + 1.0)) * amplitudes[:-1, 1:]

    raise_3 = np.zeros_like(amplitudes)
    raise_3[:-1, 1:] = np.sqrt((n[:-1, None] + 1.0) * n[None, 1:]) * amplitudes[1:, :-1]

    return 1j * (np.exp(1j * phi) * raise_2 - np.exp(-1j * phi) * raise_3)


def observable_moments(psi23: TwoModeState, phi: float) -> Tuple[float, float]:
    """
    차분 광전류 N̂_d(φ) 의 (평균, 분산).

    Args:
        psi23 (TwoModeState): BS1 이후 상태
        phi (float): 내부 총 위상 φ [rad]

    Returns:
        Tuple[float, float]: (⟨N̂_d⟩, ⟨N̂_d²⟩ - ⟨N̂_d⟩²)
    """
    psi = psi23.amplitudes
    applied = _apply_nd(psi, phi)
    mean = float(np.real(np.vdot(psi, applied)))
    second = float(np.real(np.vdot(applied, applied)))
    return mean, second - mean * mean
