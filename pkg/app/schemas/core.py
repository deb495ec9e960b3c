import math

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator



# -----------------------------------------------------
# 빔 스플리터 (BS1)
# -----------------------------------------------------
class BeamSplitter(BaseModel):
    """
    입력 빔 스플리터. 혼합각 τ 하나로 매개화한다.

    - T = cos τ (실수, 0 이상), R = i·sin τ (순허수)
    - |T|² + |R|² = 1, T·R* + T*·R = 0, i·T*·R = -|TR| 가 구성상 성립

    Attributes:
        tau (float): 혼합각 [rad], 0 ≤ τ ≤ π/2
    """
    model_config = ConfigDict(frozen=True)

    tau: float = Field(..., ge=0.0, le=math.pi / 2)

    @classmethod
    def from_transmissivity(cls, t_squared: float) -> "BeamSplitter":
        """|T|² 로부터 생성 (그림들은 T² 축을 쓴다)."""
        if not 0.0 <= t_squared <= 1.0:
            raise ValueError(f"transmissivity |T|^2 must lie in [0, 1], got {t_squared}")
        return cls(tau=math.acos(math.sqrt(t_squared)))

    @classmethod
    def balanced(cls) -> "BeamSplitter":
        return cls(tau=math.pi / 4)

    @property
    def t(self) -> float:
        return math.cos(self.tau)

    @property
    def r(self) -> complex:
        return 1j * math.sin(self.tau)

    @property
    def transmissivity(self) -> float:
        return math.cos(self.tau) ** 2

    @property
    def reflectivity(self) -> float:
        return math.sin(self.tau) ** 2

    @property
    def imbalance(self) -> float:
        """|T|² - |R|² = cos 2τ"""
        return math.cos(2.0 * self.tau)

    @property
    def coupling(self) -> float:
        """|TR| = sin(2τ)/2"""
        return math.sin(2.0 * self.tau) / 2.0



# -----------------------------------------------------
# 입력 필드 파라미터
# -----------------------------------------------------
class CoherentAmplitude(BaseModel):
    """
    코히런트 진폭 γ = |γ| e^{iθ_γ}.

    Attributes:
        magnitude (float): |γ| ≥ 0
        phase (float): θ_γ [rad], 래핑하지 않고 저장
    """
    model_config = ConfigDict(frozen=True)

    magnitude: float = Field(0.0, ge=0.0)
    phase: float = 0.0

    @property
    def value(self) -> complex:
        return self.magnitude * complex(math.cos(self.phase), math.sin(self.phase))


class SqueezeParam(BaseModel):
    """
    스퀴징 파라미터 ξ = r e^{iθ}.

    Attributes:
        r (float): 스퀴징 인자 ≥ 0
        angle (float): 스퀴징 각 [rad]
    """
    model_config = ConfigDict(frozen=True)

    r: float = Field(0.0, ge=0.0)
    angle: float = 0.0



# -----------------------------------------------------
# 입력 시나리오 (tagged union, kind로 구분)
# -----------------------------------------------------
class DualCoherent(BaseModel):
    """
    |α⟩₁ ⊗ |β⟩₀ 입력.

    Attributes:
        alpha (CoherentAmplitude): 포트 1
        beta (CoherentAmplitude): 포트 0
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal["dual_coherent"] = "dual_coherent"
    alpha: CoherentAmplitude = CoherentAmplitude()
    beta: CoherentAmplitude = CoherentAmplitude()

    @classmethod
    def from_mismatch(
            cls,
            alpha: float,
            beta: float,
            delta_theta: float = 0.0,
            alpha_phase: float = 0.0
        ) -> "DualCoherent":
        """|α|, |β|, Δθ = θ_α - θ_β 로 생성."""
        return cls(
            alpha=CoherentAmplitude(magnitude=alpha, phase=alpha_phase),
            beta=CoherentAmplitude(magnitude=beta, phase=alpha_phase - delta_theta)
        )

    @property
    def varpi(self) -> float:
        """ϖ = |β|/|α|, |α| > 0 에서만 정의."""
        if self.alpha.magnitude <= 0.0:
            raise ValueError("varpi is undefined for |alpha| = 0")
        return self.beta.magnitude / self.alpha.magnitude

    @property
    def delta_theta(self) -> float:
        return self.alpha.phase - self.beta.phase


class CoherentSqueezedVacuum(BaseModel):
    """
    D̂₁(α) Ŝ₀(ξ)|0⟩ 입력.

    Attributes:
        alpha (CoherentAmplitude): 포트 1 코히런트
        xi (SqueezeParam): 포트 0 스퀴즈드 진공 (r, θ)
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal["coh_sqz"] = "coh_sqz"
    alpha: CoherentAmplitude = CoherentAmplitude()
    xi: SqueezeParam = SqueezeParam()

    @classmethod
    def from_mismatch(
            cls,
            alpha: float,
            r: float,
            delta_theta: float = 0.0,
            alpha_phase: float = 0.0
        ) -> "CoherentSqueezedVacuum":
        """|α|, r, Δθ = 2θ_α - θ 로 생성."""
        return cls(
            alpha=CoherentAmplitude(magnitude=alpha, phase=alpha_phase),
            xi=SqueezeParam(r=r, angle=2.0 * alpha_phase - delta_theta)
        )

    @property
    def delta_theta(self) -> float:
        return 2.0 * self.alpha.phase - self.xi.angle


class SqueezedCoherentSqueezedVacuum(BaseModel):
    """
    Ŝ₀(ξ) D̂₁(α) Ŝ₁(ζ)|0⟩ 입력. 포트 1은 스퀴징 후 변위.

    Attributes:
        alpha (CoherentAmplitude): 포트 1 변위
        zeta (SqueezeParam): 포트 1 스퀴징 (z, φ)
        xi (SqueezeParam): 포트 0 스퀴즈드 진공 (r, θ)
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal["sqzcoh_sqz"] = "sqzcoh_sqz"
    alpha: CoherentAmplitude = CoherentAmplitude()
    zeta: SqueezeParam = SqueezeParam()
    xi: SqueezeParam = SqueezeParam()

    @classmethod
    def from_angles(
            cls,
            alpha: float,
            r: float,
            z: float,
            theta: float = 0.0,
            phi: float = 0.0,
            alpha_phase: float = 0.0
        ) -> "SqueezedCoherentSqueezedVacuum":
        return cls(
            alpha=CoherentAmplitude(magnitude=alpha, phase=alpha_phase),
            zeta=SqueezeParam(r=z, angle=phi),
            xi=SqueezeParam(r=r, angle=theta)
        )

    @property
    def delta_theta(self) -> float:
        """Δθ = 2θ_α - θ (코히런트 ↔ 포트 0 스퀴징)"""
        return 2.0 * self.alpha.phase - self.xi.angle

    @property
    def delta_phi(self) -> float:
        """Δφ = 2θ_α - φ (같은 포트의 코히런트 ↔ 스퀴징)"""
        return 2.0 * self.alpha.phase - self.zeta.angle

    @property
    def squeeze_offset(self) -> float:
        """φ - θ (두 스퀴징 각의 차)"""
        return self.zeta.angle - self.xi.angle


InputScenario = Annotated[
    Union[DualCoherent, CoherentSqueezedVacuum, SqueezedCoherentSqueezedVacuum],
    Field(discriminator="kind")
]



# -----------------------------------------------------
# Fisher 행렬 (φ_s, φ_d)
# -----------------------------------------------------
class FisherMatrix(BaseModel):
    """
    합/차 위상에 대한 2×2 Fisher 행렬 𝔉.

    수치 오라클 결과도 담으므로 대칭성과 양의 준정부호성은
    스케일 기준 상대 허용오차 안에서 검사한다.

    Attributes:
        ss, sd, ds, dd (float): 행렬 원소
    """
    model_config = ConfigDict(frozen=True)

    ss: float
    sd: float
    ds: float
    dd: float

    @classmethod
    def symmetric(cls, ss: float, sd: float, dd: float) -> "FisherMatrix":
        return cls(ss=ss, sd=sd, ds=sd, dd=dd)

    @model_validator(mode="after")
    def _check_psd(self) -> "FisherMatrix":
        scale = max(1.0, abs(self.ss), abs(self.dd))
        if abs(self.sd - self.ds) > 1e-9 * scale:
            raise ValueError(f"Fisher matrix must be symmetric: sd={self.sd}, ds={self.ds}")
        if self.ss < -1e-12 * scale or self.dd < -1e-12 * scale:
            raise ValueError("Fisher matrix diagonal must be nonnegative")
        if self.determinant < -1e-9 * scale * scale:
            raise ValueError(f"Fisher matrix must be positive semidefinite (det={self.determinant})")
        return self

    @property
    def determinant(self) -> float:
        """D_𝔉 = ss·dd - sd·ds"""
        return self.ss * self.dd - self.sd * self.ds

    def crb_covariance(self) -> tuple[tuple[float, float], tuple[float, float]]:
        """
        행렬형 Cramér-Rao 하한 𝔉⁻¹ (공분산 행렬의 하한).

        Raises:
            ValueError: 행렬식이 0
        """
        det = self.determinant
        if det <= 0.0:
            raise ValueError("Fisher matrix is singular; no covariance bound")
        return (
            (self.dd / det, -self.sd / det),
            (-self.ds / det, self.ss / det),
        )



# -----------------------------------------------------
# 위상 설정
# -----------------------------------------------------
class PhaseConfig(BaseModel):
    """
    합/차 위상 φ_{s/d} = (φ₁ ± φ₂)/2.

    Attributes:
        phi_s (float): 합 위상 [rad]
        phi_d (float): 차 위상 [rad]
    """
    model_config = ConfigDict(frozen=True)

    phi_s: float = 0.0
    phi_d: float = 0.0

    @classmethod
    def from_arms(cls, phi_1: float, phi_2: float) -> "PhaseConfig":
        return cls(phi_s=(phi_1 + phi_2) / 2.0, phi_d=(phi_1 - phi_2) / 2.0)

    @property
    def phi_1(self) -> float:
        return self.phi_s + self.phi_d

    @property
    def phi_2(self) -> float:
        return self.phi_s - self.phi_d
