import argparse

from pathlib import Path

from app.core.constants import ExitCode
from app.routes.v0.base import add_scenario_arguments, scenario_from_args, to_radians
from app.utils.optimum import run_optimum



# -----------------------------------------------------
# Optimum Command
# - 닫힌 형태 최적값과 κ 영역 보고 (JSON)
# -----------------------------------------------------
def register(subparsers, parents) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "optimum",
        parents=parents,
        help="최적 Δθ, |T|², φ, 임계각, κ 영역",
        description="고정하지 않은 변수 하나에 대한 최적값과 그 점의 𝓕 를 JSON 으로 출력"
    )
    add_scenario_arguments(parser)
    parser.add_argument("--t-squared", type=float, default=None, help="고정할 |T|²")
    parser.add_argument("--output", default=None, help="JSON 보고서 경로")
    parser.set_defaults(handler=handle)
    return parser


def handle(args: argparse.Namespace) -> int:
    """
    optimum 서브커맨드. 해가 없어도 notes 에 남기고 0 을 반환한다.
    """
    to_radians(args)
    report = run_optimum(
        scenario_from_args(args),
        t_squared=args.t_squared,
        fix_delta_theta=args.delta_theta is not None,
    )
    payload = report.model_dump_json(indent=2)
    if args.output:
        path = Path(args.output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(payload, encoding="utf-8")
    print(payload)
    return ExitCode.OK
