import csv
import logging

from concurrent.futures import Executor
from pathlib import Path
from typing import Optional

import numpy as np

from app.core.constants import CsvFormat
from app.core.exceptions import InsensitiveWorkingPointError, NoInformationError
from app.schemas.core import BeamSplitter, DualCoherent
from app.schemas.detection import DetectionPoint
from app.schemas.sweep import SweepResult, SweepRow, SweepSpec, SweepVar
from app.utils import closed_form
from app.utils.detection import delta_phi_diff, phi_opt
from app.utils.fisher import qcrb_sensitivity
from app.utils.scenario import build_scenario, scenario_params


logger = logging.getLogger(__name__)




class SweepRunner:
    """
    SweepSpec 을 격자 × overlay 행으로 평가하고 CSV 로 내보내는 유틸리티 클래스.

    주요 역할:
    1. overlay 덮어쓰기와 스윕 변수를 적용해 (BS1, 입력 상태) 를 만든다.
    2. 닫힌 형태 𝓕, QCRB, 선택적으로 Δφ_diff 와 κ 를 계산한다.
    3. 행 순서는 (overlay, 격자 index) 로 고정되며 워커 풀 완료 순서와 무관하다.
    """

    # -------------------------------------------------
    # 1. 한 점 평가
    # -------------------------------------------------
    @staticmethod
    def evaluate(spec: SweepSpec, overlay_index: int, x: float) -> SweepRow:
        """
        overlay 하나, 스윕 값 하나에 대한 행.

        Args:
            spec (SweepSpec): 스윕 설정
            overlay_index (int): spec.overlays 의 index
            x (float): 스윕 변수 값

        Returns:
            SweepRow: 계산된 행
        """
        overlay = spec.overlays[overlay_index]
        values = dict(overlay.values)
        t_squared = values.pop("t_squared", spec.t_squared)
        phi_internal = values.pop("phi_internal", spec.phi_internal)

        params = scenario_params(spec.scenario)
        params.update(values)
        if spec.sweep_var is SweepVar.T_SQUARED:
            t_squared = x
        elif spec.sweep_var is SweepVar.DELTA_THETA:
            params["delta_theta"] = x
        elif spec.sweep_var is SweepVar.THETA:
            params.pop("delta_theta", None)
            params["theta"] = x
        else:
            phi_internal = x

        scenario = build_scenario(overlay.kind or spec.scenario.kind, params)
        bs = BeamSplitter.from_transmissivity(t_squared)

        fisher = closed_form.fisher(bs, scenario)
        try:
            dphi_qcrb = qcrb_sensitivity(fisher)
        except NoInformationError:
            dphi_qcrb = float("inf")

        dphi_diff = None
        if spec.detection and isinstance(scenario, DualCoherent):
            dphi_diff = SweepRunner._detection(spec, bs, scenario, phi_internal)

        kappa = None
        if not isinstance(scenario, DualCoherent):
            kappa = closed_form.kappa_and_floor(scenario)[0]

        return SweepRow(
            overlay=overlay_index,
            label=overlay.label,
            x=x,
            fisher=fisher,
            dphi_qcrb=dphi_qcrb,
            dphi_diff=dphi_diff,
            kappa=kappa,
        )

    @staticmethod
    def _detection(
            spec: SweepSpec,
            bs: BeamSplitter,
            scenario: DualCoherent,
            phi_internal: Optional[float]
        ) -> float:
        """
        φ 결정 순서: 스윕/고정 φ > phi_opt_t_squared 에서의 φ_opt > 현재 BS1 의 φ_opt
        """
        if phi_internal is None:
            reference = bs
            if spec.phi_opt_t_squared is not None:
                reference = BeamSplitter.from_transmissivity(spec.phi_opt_t_squared)
            phi_internal = phi_opt(reference, scenario).value
        try:
            return delta_phi_diff(DetectionPoint(bs=bs, source=scenario, phi=phi_internal))
        except InsensitiveWorkingPointError:
            return float("inf")


    # -------------------------------------------------
    # 2. 전체 스윕 (워커 풀 사용 가능)
    # -------------------------------------------------
    @classmethod
    def run(cls, spec: SweepSpec, pool: Optional[Executor] = None) -> SweepResult:
        """
        모든 (overlay, 격자점) 을 평가한다. 행 수 = n_points × overlays.

        Args:
            spec (SweepSpec): 스윕 설정
            pool (Executor, optional): 워커 풀, None 이면 순차 실행

        Returns:
            SweepResult: overlay 순, 격자 순으로 정렬된 행
        """
        grid = np.linspace(spec.lo, spec.hi, spec.n_points)
        tasks = [(i, float(x)) for i in range(len(spec.overlays)) for x in grid]
        logger.info(f"sweep {spec.sweep_var.value}: {len(spec.overlays)} overlay(s) x {spec.n_points} point(s)")

        if pool is None:
            rows = [cls.evaluate(spec, i, x) for i, x in tasks]
        else:
            # Executor.map 은 제출 순서대로 결과를 돌려준다
            rows = list(pool.map(lambda task: cls.evaluate(spec, *task), tasks))
        return SweepResult(sweep_var=spec.sweep_var, rows=rows)


    # -------------------------------------------------
    # 3. CSV 출력
    # -------------------------------------------------
    @staticmethod
    def _cell(value: Optional[float]) -> str:
        if value is None:
            return ""
        if np.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.{CsvFormat.SIGNIFICANT_DIGITS}g}"

    @classmethod
    def to_csv(cls, result: SweepResult, path: str | Path) -> Path:
        """
        UTF-8, LF, 17 유효숫자 CSV 로 저장한다. 같은 입력이면 바이트 단위로 같다.
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator=CsvFormat.LINE_END)
            writer.writerow(
                ["overlay", "label", result.sweep_var.column, "fisher", "dphi_qcrb_rad", "dphi_diff_rad", "kappa"]
            )
            for row in result.rows:
                writer.writerow([
                    row.overlay,
                    row.label,
                    cls._cell(row.x),
                    cls._cell(row.fisher),
                    cls._cell(row.dphi_qcrb),
                    cls._cell(row.dphi_diff),
                    cls._cell(row.kappa),
                ])
        logger.info(f"wrote {len(result.rows)} row(s) to {path}")
        return path


def run_sweep(spec: SweepSpec, pool: Optional[Executor] = None) -> SweepResult:
    return SweepRunner.run(spec, pool)
