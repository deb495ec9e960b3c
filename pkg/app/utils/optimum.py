import math
import logging

from typing import List, Optional

from app.core.exceptions import InvalidParameterError
from app.schemas.core import (
    BeamSplitter,
    CoherentSqueezedVacuum,
    DualCoherent,
    InputScenario,
    SqueezedCoherentSqueezedVacuum,
)
from app.schemas.optimum import OptimumReport
from app.utils import closed_form, optimize
from app.utils.detection import phi_opt
from app.utils.scenario import build_scenario, scenario_params


logger = logging.getLogger(__name__)



def _tau_to_t_squared(tau: float) -> float:
    return math.cos(tau) ** 2


def _dual(
        scenario: DualCoherent,
        t_squared: Optional[float],
        fix_delta_theta: bool
    ) -> OptimumReport:
    """
    - |T|² 만 고정: Δθ_opt 를 구해 그 점에서 평가
    - Δθ 만 고정: |T|²_opt 를 구해 평가
    - 둘 다 고정: 그대로 평가
    - 둘 다 자유: balanced, Δθ = 0
    """
    if scenario.alpha.magnitude <= 0.0:
        raise InvalidParameterError("optimum for dual_coherent needs |alpha| > 0")
    varpi = scenario.varpi
    notes: List[str] = []
    delta_theta_opt = None
    t_squared_opt = None

    if t_squared is not None and not fix_delta_theta:
        bs = BeamSplitter.from_transmissivity(t_squared)
        delta_theta_opt = optimize.delta_theta_opt_dual(bs, varpi)
        if delta_theta_opt is None:
            notes.append(f"no solution: no compensating mismatch exists for |T|^2={t_squared}, varpi={varpi:.6g}")
        else:
            params = scenario_params(scenario)
            params["delta_theta"] = delta_theta_opt
            scenario = build_scenario(scenario.kind, params)
    elif t_squared is None and fix_delta_theta:
        t_squared_opt = optimize.t_opt_squared_dual(scenario.delta_theta, varpi)
        t_squared = t_squared_opt.value
        if t_squared_opt.degenerate:
            notes.append("any transmission attains the maximum (varpi=1, sin(delta_theta)=0)")
    elif t_squared is None:
        t_squared = 0.5
        params = scenario_params(scenario)
        params["delta_theta"] = 0.0
        scenario = build_scenario(scenario.kind, params)

    bs = BeamSplitter.from_transmissivity(t_squared)
    roots = optimize.tr_squared_stationary_roots(scenario.delta_theta, varpi)
    return OptimumReport(
        scenario=scenario,
        t_squared=t_squared,
        fisher=closed_form.fisher_dual_coherent(bs, scenario),
        fisher_max=optimize.fisher_max_dual(scenario),
        mean_photon_number=closed_form.mean_photon_number(scenario),
        equal_photon_fisher=optimize.fisher_equal_photons_dual(scenario),
        delta_theta_opt=delta_theta_opt,
        t_squared_opt=t_squared_opt,
        phi_opt=phi_opt(bs, scenario),
        tr_squared_roots=None if roots is None else list(roots),
        notes=notes,
    )


def _coh_sqz(scenario: CoherentSqueezedVacuum, t_squared: Optional[float]) -> OptimumReport:
    notes: List[str] = []
    regime = optimize.kappa_coh_sqz(scenario)
    best_tau = optimize.best_transmission(regime)
    if t_squared is None:
        t_squared = _tau_to_t_squared(best_tau[0])

    threshold = None
    threshold_approx = None
    if scenario.alpha.magnitude > 0.0 and scenario.xi.r > 0.0:
        threshold = optimize.delta_theta_lim(scenario)
        threshold_approx = optimize.delta_theta_lim_approx(scenario)
        if threshold is None:
            notes.append("no solution: kappa never vanishes for these |alpha|, r")
    else:
        notes.append("delta_theta_lim needs |alpha| > 0 and r > 0")

    return OptimumReport(
        scenario=scenario,
        t_squared=t_squared,
        fisher=closed_form.fisher_coh_sqz(BeamSplitter.from_transmissivity(t_squared), scenario),
        fisher_max=optimize.fisher_max_coh_sqz(scenario),
        mean_photon_number=closed_form.mean_photon_number(scenario),
        equal_photon_fisher=optimize.fisher_equal_photons_dual(scenario),
        kappa=regime,
        best_tau=list(best_tau),
        delta_theta_lim=threshold,
        delta_theta_lim_approx=threshold_approx,
        fisher_at_threshold=closed_form.transmission_independent_fisher(scenario),
        notes=notes,
    )


def _sqzcoh_sqz(scenario: SqueezedCoherentSqueezedVacuum, t_squared: Optional[float]) -> OptimumReport:
    notes: List[str] = []
    regime = optimize.kappa_sqzcoh_sqz(scenario)
    best_tau = optimize.best_transmission(regime)
    if t_squared is None:
        t_squared = _tau_to_t_squared(best_tau[0])

    theta, phi = optimize.matching_phases_sqzcoh_sqz(scenario.alpha.phase)
    root = optimize.delta_theta_lim_sqzcoh_sqz(scenario)
    if root is None:
        notes.append("no solution: kappa keeps its sign over delta_theta in [0, pi]")

    return OptimumReport(
        scenario=scenario,
        t_squared=t_squared,
        fisher=closed_form.fisher_sqzcoh_sqz(BeamSplitter.from_transmissivity(t_squared), scenario),
        fisher_max=optimize.fisher_max_sqzcoh_sqz(scenario),
        mean_photon_number=closed_form.mean_photon_number(scenario),
        equal_photon_fisher=optimize.fisher_equal_photons_dual(scenario),
        kappa=regime,
        best_tau=list(best_tau),
        fisher_at_threshold=closed_form.transmission_independent_fisher(scenario),
        matching_phases={"theta": theta, "phi": phi},
        kappa_root_delta_theta=root,
        notes=notes,
    )


def run_optimum(
        scenario: InputScenario,
        t_squared: Optional[float] = None,
        fix_delta_theta: bool = False
    ) -> OptimumReport:
    """
    시나리오별 최적값, 그 점의 𝓕, κ 영역을 모은 보고서.

    해가 없는 경우(arcsin/arccos 정의역 밖)도 정상 결과이며 notes 에 남는다.

    Args:
        scenario (InputScenario): 입력 상태
        t_squared (float, optional): 고정할 |T|²
        fix_delta_theta (bool): 시나리오의 Δθ 를 고정값으로 취급할지 여부 (이중 코히런트)

    Returns:
        OptimumReport: 결과
    """
    if isinstance(scenario, DualCoherent):
        report = _dual(scenario, t_squared, fix_delta_theta)
    elif isinstance(scenario, CoherentSqueezedVacuum):
        report = _coh_sqz(scenario, t_squared)
    else:
        report = _sqzcoh_sqz(scenario, t_squared)

    for note in report.notes:
        logger.info(note)
    return report
