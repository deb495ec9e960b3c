import logging
import argparse

from pathlib import Path

from app.core.constants import ExitCode, OracleLimit
from app.dependencies.runtime import get_pool
from app.schemas.verify import Envelope
from app.utils.verify import run_verify


logger = logging.getLogger(__name__)



# -----------------------------------------------------
# Verify Command
# - 닫힌 형태 Fisher 행렬 vs Fock 오라클
# -----------------------------------------------------
def register(subparsers, parents) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "verify",
        parents=parents,
        help="Fock 오라클 동등성 검증",
        description="시나리오마다 seed 로 추첨한 파라미터에서 Fisher 행렬 원소를 오라클과 비교"
    )
    parser.add_argument("--n-draws", type=int, default=50)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--alpha-max", type=float, default=OracleLimit.ALPHA_MAX)
    parser.add_argument("--varpi-max", type=float, default=OracleLimit.VARPI_MAX)
    parser.add_argument("--r-max", type=float, default=OracleLimit.SQUEEZE_MAX)
    parser.add_argument("--z-max", type=float, default=OracleLimit.SQUEEZE_MAX)
    parser.add_argument("--cutoff", type=int, default=None, help="생략하면 범위에 따라 40 또는 60")
    parser.add_argument("--output", default=None, help="JSON 보고서 경로")
    parser.set_defaults(handler=handle)
    return parser


def handle(args: argparse.Namespace) -> int:
    """
    verify 서브커맨드.

    Returns:
        int: 모두 통과하면 0, 하나라도 1e-6 을 넘으면 2
    """
    envelope = Envelope(
        alpha_max=args.alpha_max,
        varpi_max=args.varpi_max,
        r_max=args.r_max,
        z_max=args.z_max,
        cutoff=args.cutoff,
    )
    report = run_verify(envelope, n_draws=args.n_draws, seed=args.seed, pool=get_pool(args))

    if args.output:
        path = Path(args.output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report.model_dump_json(indent=2), encoding="utf-8")

    status = "PASS" if report.passed else "FAIL"
    print(f"{status} draws={len(report.draws)} worst_error={report.worst_error:.3e}")
    if not report.passed:
        logger.error(f"{sum(not d.passed for d in report.draws)} draw(s) exceeded the oracle tolerance")
        return ExitCode.VERIFY_FAILED
    return ExitCode.OK
