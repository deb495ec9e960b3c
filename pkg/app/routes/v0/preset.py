import argparse

from app.core.constants import ExitCode
from app.dependencies.runtime import get_pool
from app.routes.v0.base import require
from app.utils.presets import PRESETS
from app.utils.sweep import SweepRunner, run_sweep



# -----------------------------------------------------
# Preset Command
# - 그림 재현용 스윕을 이름으로 실행
# -----------------------------------------------------
def register(subparsers, parents) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "preset",
        parents=parents,
        help="그림 재현 프리셋 CSV 생성",
        description="fig2..fig7 프리셋 스윕을 실행해 CSV 로 저장"
    )
    parser.add_argument("name", choices=sorted(PRESETS))
    parser.add_argument("--n-points", type=int, default=None, help="격자 점 수 (기본: 프리셋 값)")
    parser.add_argument("--output", default=None, help="CSV 경로")
    parser.set_defaults(handler=handle)
    return parser


def handle(args: argparse.Namespace) -> int:
    require(args, "output")
    spec = PRESETS[args.name](args.n_points)
    result = run_sweep(spec, get_pool(args))
    SweepRunner.to_csv(result, args.output)
    return ExitCode.OK
