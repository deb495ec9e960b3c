"""
그림 재현용 스윕 프리셋. 각 함수는 SweepSpec 하나를 만든다.
"""
import math

from typing import Callable, Dict, Optional

from app.schemas.core import CoherentSqueezedVacuum, DualCoherent, SqueezedCoherentSqueezedVacuum
from app.schemas.sweep import OverlayOverride, SweepSpec, SweepVar
from app.utils.closed_form import mean_photon_number
from app.utils.optimize import delta_theta_lim


# 스윕 격자 기본 점 수
T_SQUARED_POINTS = 201
ANGLE_POINTS = 361

# 이중 코히런트 Δθ 스윕에서 겹쳐 그리는 투과 계수 T
_TRANSMISSIONS = (0.3, 0.5, 1.0 / math.sqrt(2.0), 0.8, 0.9)



def _transmission_overlays() -> list[OverlayOverride]:
    overlays = []
    for t in _TRANSMISSIONS:
        # T = 1/√2 는 정확히 |T|² = 0.5 로 둔다
        t_squared = 0.5 if t == 1.0 / math.sqrt(2.0) else t * t
        overlays.append(OverlayOverride(label=f"T={t:.4g}", values={"t_squared": t_squared}))
    return overlays


def fig2(n_points: Optional[int] = None) -> SweepSpec:
    """|T|² 스윕, |α|=10, |β|=9.9, Δθ ∈ {0, π/6, π/3}: 모든 곡선이 같은 최대 198.01"""
    return SweepSpec(
        scenario=DualCoherent.from_mismatch(alpha=10.0, beta=9.9),
        sweep_var=SweepVar.T_SQUARED,
        lo=0.0,
        hi=1.0,
        n_points=n_points or T_SQUARED_POINTS,
        overlays=[
            OverlayOverride(label="delta_theta=0", values={"delta_theta": 0.0}),
            OverlayOverride(label="delta_theta=pi/6", values={"delta_theta": math.pi / 6.0}),
            OverlayOverride(label="delta_theta=pi/3", values={"delta_theta": math.pi / 3.0}),
        ],
    )


def _dual_delta_theta(beta: float, n_points: Optional[int]) -> SweepSpec:
    return SweepSpec(
        scenario=DualCoherent.from_mismatch(alpha=10.0, beta=beta),
        sweep_var=SweepVar.DELTA_THETA,
        lo=0.0,
        hi=2.0 * math.pi,
        n_points=n_points or ANGLE_POINTS,
        overlays=_transmission_overlays(),
    )


def fig3(n_points: Optional[int] = None) -> SweepSpec:
    """Δθ 스윕, |α|=10, |β|=2 (ϖ=0.2), 다섯 T"""
    return _dual_delta_theta(2.0, n_points)


def fig4(n_points: Optional[int] = None) -> SweepSpec:
    """Δθ 스윕, |α|=10, |β|=8 (ϖ=0.8), 다섯 T"""
    return _dual_delta_theta(8.0, n_points)


def fig5(n_points: Optional[int] = None) -> SweepSpec:
    """|T|² 스윕에서 QCRB 와 차분 강도 검출 비교, φ 는 |T|²=0.25 의 φ_opt 로 고정"""
    return SweepSpec(
        scenario=DualCoherent.from_mismatch(alpha=10.0, beta=8.0, delta_theta=math.pi / 90.0),
        sweep_var=SweepVar.T_SQUARED,
        lo=0.0,
        hi=1.0,
        n_points=n_points or T_SQUARED_POINTS,
        detection=True,
        phi_opt_t_squared=0.25,
        overlays=[OverlayOverride(label="phi_opt@t_squared=0.25")],
    )


def fig6(n_points: Optional[int] = None) -> SweepSpec:
    """
    코히런트 + 스퀴즈드 진공, |α|=10, r=2.3, |T|² 스윕.
    Δθ ∈ {π/2, Δθ_lim, 0.95π} 와 같은 ⟨n⟩ 의 단일 코히런트 기준 곡선.
    """
    scenario = CoherentSqueezedVacuum.from_mismatch(alpha=10.0, r=2.3)
    threshold = delta_theta_lim(scenario)
    reference = math.sqrt(mean_photon_number(scenario))
    return SweepSpec(
        scenario=scenario,
        sweep_var=SweepVar.T_SQUARED,
        lo=0.0,
        hi=1.0,
        n_points=n_points or T_SQUARED_POINTS,
        overlays=[
            OverlayOverride(label="delta_theta=0.5pi", values={"delta_theta": 0.5 * math.pi}),
            OverlayOverride(label="delta_theta=lim", values={"delta_theta": threshold}),
            OverlayOverride(label="delta_theta=0.95pi", values={"delta_theta": 0.95 * math.pi}),
            OverlayOverride(
                label="coherent_equal_photons",
                values={"alpha": reference, "beta": 0.0},
                kind="dual_coherent",
            ),
        ],
    )


def fig7(n_points: Optional[int] = None) -> SweepSpec:
    """스퀴즈드 코히런트 + 스퀴즈드 진공, balanced, |α|=10, r=z=2.3, θ 스윕, φ ∈ {0, π/2, π}"""
    return SweepSpec(
        scenario=SqueezedCoherentSqueezedVacuum.from_angles(alpha=10.0, r=2.3, z=2.3),
        sweep_var=SweepVar.THETA,
        lo=0.0,
        hi=2.0 * math.pi,
        n_points=n_points or ANGLE_POINTS,
        t_squared=0.5,
        overlays=[
            OverlayOverride(label="phi=0", values={"phi": 0.0}),
            OverlayOverride(label="phi=pi/2", values={"phi": math.pi / 2.0}),
            OverlayOverride(label="phi=pi", values={"phi": math.pi}),
        ],
    )


PRESETS: Dict[str, Callable[[Optional[int]], SweepSpec]] = {
    "fig2": fig2,
    "fig3": fig3,
    "fig4": fig4,
    "fig5": fig5,
    "fig6": fig6,
    "fig7": fig7,
}
