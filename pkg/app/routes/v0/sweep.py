import math
import argparse

from app.core.constants import ExitCode
from app.dependencies.runtime import get_pool
from app.schemas.sweep import SweepSpec, SweepVar
from app.routes.v0.base import add_scenario_arguments, parse_overlay, require, scenario_from_args, to_radians
from app.utils.sweep import SweepRunner, run_sweep



# -----------------------------------------------------
# Sweep Command
# - 한 변수에 대한 𝓕 / Δφ 스윕을 CSV 로 저장
# -----------------------------------------------------
def register(subparsers, parents) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "sweep",
        parents=parents,
        help="파라미터 스윕 CSV 생성",
        description="sweep_var 를 [lo, hi] 에서 n_points 로 바꾸며 overlay 별 𝓕, Δφ_QCRB, Δφ_diff, κ 를 기록"
    )
    add_scenario_arguments(parser)
    parser.add_argument("--sweep-var", choices=[v.value for v in SweepVar], default=None)
    parser.add_argument("--lo", type=float, default=None)
    parser.add_argument("--hi", type=float, default=None)
    parser.add_argument("--n-points", type=int, default=101)
    parser.add_argument("--t-squared", type=float, default=0.5, help="스윕하지 않을 때의 |T|²")
    parser.add_argument("--detection", action="store_true", help="차분 강도 검출 Δφ_diff 열 (dual_coherent)")
    parser.add_argument("--phi-internal", type=float, default=None, help="고정 내부 위상 φ [rad]")
    parser.add_argument("--phi-opt-t-squared", type=float, default=None, help="이 |T|² 의 φ_opt 로 φ 고정")
    parser.add_argument("--overlay", action="append", default=[], help="key=value[,key=value...] (반복 가능)")
    parser.add_argument("--output", default=None, help="CSV 경로")
    parser.set_defaults(handler=handle)
    return parser


def handle(args: argparse.Namespace) -> int:
    """
    sweep 서브커맨드.

    - 요청: 시나리오 플래그 + 스윕 범위 + overlay
    - 결과: CSV (overlay,label,x_<var>,fisher,dphi_qcrb_rad,dphi_diff_rad,kappa)

    Args:
        args (argparse.Namespace): 파싱된 인자

    Returns:
        int: exit code
    """
    require(args, "sweep_var", "lo", "hi", "output")
    overlays = to_radians(args, [parse_overlay(text) for text in args.overlay])
    lo, hi = args.lo, args.hi
    if args.degrees and args.sweep_var != SweepVar.T_SQUARED.value:
        lo, hi = math.radians(lo), math.radians(hi)

    spec = SweepSpec(
        scenario=scenario_from_args(args),
        sweep_var=SweepVar(args.sweep_var),
        lo=lo,
        hi=hi,
        n_points=args.n_points,
        t_squared=args.t_squared,
        detection=args.detection,
        phi_internal=args.phi_internal,
        phi_opt_t_squared=args.phi_opt_t_squared,
        output=args.output,
        **({"overlays": overlays} if overlays else {}),
    )
    result = run_sweep(spec, get_pool(args))
    SweepRunner.to_csv(result, args.output)
    return ExitCode.OK
