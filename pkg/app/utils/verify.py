import math
import logging

from concurrent.futures import Executor
from typing import Dict, List, Optional, Tuple

import numpy as np

from app.core.constants import OracleLimit, Tolerance
from app.core.exceptions import InvalidParameterError, OracleEnvelopeError
from app.schemas.core import BeamSplitter
from app.schemas.verify import DrawResult, Envelope, VerifyReport
from app.utils.closed_form import fisher_matrix
from app.utils.fock_oracle import fisher_matrix_numeric, prepare_output_state
from app.utils.scenario import build_scenario


logger = logging.getLogger(__name__)

SCENARIO_KINDS = ("dual_coherent", "coh_sqz", "sqzcoh_sqz")

# |closed form| 가 이 값보다 작으면 절대 오차 기준이 적용된다
_ABS_FLOOR = Tolerance.ORACLE_ABS / Tolerance.ORACLE_REL



def check_envelope(envelope: Envelope) -> None:
    """
    오라클이 지원하는 범위인지 확인한다.

    Raises:
        OracleEnvelopeError: 상한 초과 (이유 포함)
    """
    limits = (
        ("alpha_max", envelope.alpha_max, OracleLimit.ALPHA_MAX),
        ("varpi_max", envelope.varpi_max, OracleLimit.VARPI_MAX),
        ("r_max", envelope.r_max, OracleLimit.SQUEEZE_MAX),
        ("z_max", envelope.z_max, OracleLimit.SQUEEZE_MAX),
    )
    for name, value, limit in limits:
        if value > limit:
            raise OracleEnvelopeError(
                f"{name}={value} is outside the Fock oracle support ({name} <= {limit}); "
                f"use the closed forms directly for larger parameters"
            )


def _angle(rng: np.random.Generator) -> float:
    """(-π, π] 균등"""
    return float(math.pi - rng.uniform(0.0, 2.0 * math.pi))


def draw_params(kind: str, envelope: Envelope, rng: np.random.Generator) -> Dict[str, float]:
    """한 번의 추첨 파라미터 (tau 포함)."""
    params = {
        "tau": float(rng.uniform(OracleLimit.TAU_MARGIN, math.pi / 2.0 - OracleLimit.TAU_MARGIN)),
        "alpha": float(rng.uniform(0.0, envelope.alpha_max)),
        "alpha_phase": _angle(rng),
    }
    if kind == "dual_coherent":
        params["beta"] = params["alpha"] * float(rng.uniform(0.0, envelope.varpi_max))
        params["beta_phase"] = _angle(rng)
        return params

    params["r"] = float(rng.uniform(0.0, envelope.r_max))
    params["theta"] = _angle(rng)
    if kind == "sqzcoh_sqz":
        params["z"] = float(rng.uniform(0.0, envelope.z_max))
        params["phi"] = _angle(rng)
    return params


def element_error(closed: float, numeric: float) -> float:
    """
    정규화 오차 |d| / max(|closed|, 1e-2).

    ≤ 1e-6 이면 "상대 1e-6 또는 절대 1e-8" 기준을 만족한다.
    """
    return abs(numeric - closed) / max(abs(closed), _ABS_FLOOR)


def compare_draw(kind: str, index: int, params: Dict[str, float], cutoff: int) -> DrawResult:
    """닫힌 형태 Fisher 행렬과 오라클 Fisher 행렬을 원소별로 비교."""
    scenario_values = {key: value for key, value in params.items() if key != "tau"}
    scenario = build_scenario(kind, scenario_values)
    bs = BeamSplitter(tau=params["tau"])

    closed = fisher_matrix(bs, scenario)
    numeric = fisher_matrix_numeric(prepare_output_state(bs, scenario, cutoff))
    worst = max(
        element_error(closed.ss, numeric.ss),
        element_error(closed.sd, numeric.sd),
        element_error(closed.ds, numeric.ds),
        element_error(closed.dd, numeric.dd),
    )
    passed = worst <= Tolerance.ORACLE_REL
    if not passed:
        logger.error(f"{kind} draw {index} disagrees with the oracle: error={worst:.3g}, params={params}")
    return DrawResult(kind=kind, index=index, params=params, max_error=worst, passed=passed)


def run_verify(
        envelope: Envelope,
        n_draws: int,
        seed: int,
        pool: Optional[Executor] = None
    ) -> VerifyReport:
    """
    시나리오마다 n_draws 번 추첨해 닫힌 형태와 Fock 오라클을 비교한다.

    추첨은 seed 로 순차 생성하고 평가만 병렬로 돌리므로 결과는 재현된다.

    Args:
        envelope (Envelope): 추첨 범위
        n_draws (int): 시나리오당 추첨 수 (0 이면 빈 통과 보고서)
        seed (int): 난수 시드
        pool (Executor, optional): 워커 풀

    Returns:
        VerifyReport: 추첨별 최대 오차와 통과 여부

    Raises:
        OracleEnvelopeError: envelope 이 오라클 지원 범위를 벗어남
    """
    check_envelope(envelope)
    if n_draws < 0:
        raise InvalidParameterError(f"n_draws must be nonnegative, got {n_draws}")

    rng = np.random.default_rng(seed)
    tasks: List[Tuple[str, int, Dict[str, float]]] = [
        (kind, i, draw_params(kind, envelope, rng)) for kind in SCENARIO_KINDS for i in range(n_draws)
    ]
    logger.info(f"verifying {len(tasks)} draw(s) at cutoff {envelope.cutoff}")

    def evaluate(task: Tuple[str, int, Dict[str, float]]) -> DrawResult:
        kind, index, params = task
        return compare_draw(kind, index, params, envelope.cutoff)

    draws = list(pool.map(evaluate, tasks)) if pool is not None else [evaluate(task) for task in tasks]
    worst = max((draw.max_error for draw in draws), default=0.0)
    return VerifyReport(
        envelope=envelope,
        n_draws=n_draws,
        seed=seed,
        worst_error=worst,
        passed=all(draw.passed for draw in draws),
        draws=draws,
    )
