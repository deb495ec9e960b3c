import sys
import logging

from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Optional, Sequence, Tuple

from app.core.config import LOG_LEVEL, read_threads
from app.core.constants import ExitCode
from app.core.exceptions import QfiMziError
from app.routes.v0 import base, optimum, preset, sweep, verify


logger = logging.getLogger(__name__)



# -----------------------------------------------------
# 1. 파서 조립
# -----------------------------------------------------
# - 서브커맨드 단위로 기능을 모듈화 (routes/v0)
# - sweep: 파라미터 스윕 CSV
# - preset: 그림 재현 프리셋 CSV
# - verify: Fock 오라클 동등성 검증
# - optimum: 닫힌 형태 최적값 JSON
# - 공통 플래그(--config, --degrees, -v)는 parents 로 각 서브커맨드에 붙음
def build_parser() -> Tuple[base.CliParser, Dict[str, base.CliParser]]:
    parser = base.CliParser(
        prog="qfi-mzi",
        description="불균형 Mach-Zehnder 간섭계의 양자 Fisher 정보와 위상 감도"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    parents = [base.common_parent()]

    commands = {
        "sweep": sweep.register(subparsers, parents),
        "preset": preset.register(subparsers, parents),
        "verify": verify.register(subparsers, parents),
        "optimum": optimum.register(subparsers, parents),
    }
    return parser, commands



# -----------------------------------------------------
# 2. 로깅 설정
# -----------------------------------------------------
# - 루트 로거를 한 번만 설정, 각 모듈은 logging.getLogger(__name__)
# - 레벨: -vv DEBUG > -v INFO > QFI_MZI_LOG_LEVEL (기본 WARNING)
def configure_logging(verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, LOG_LEVEL, logging.WARNING)

    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] [%(name)s] %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    logging.getLogger().setLevel(level)



# -----------------------------------------------------
# 3. 실행
# -----------------------------------------------------
# - 워커 풀은 실행마다 한 번만 만들고 Namespace 에 실어 핸들러가 공유
# - exit code: 0 성공/해 없음, 1 사용법·파라미터 오류, 2 검증 실패
def main(argv: Optional[Sequence[str]] = None) -> int:
    parser, commands = build_parser()
    try:
        args = base.parse_with_config(parser, commands, argv)
        configure_logging(args.verbose)

        with ThreadPoolExecutor(max_workers=read_threads()) as pool:
            args.pool = pool
            return args.handler(args)

    except (QfiMziError, ValueError) as e:
        # pydantic ValidationError 도 ValueError
        logger.debug("command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.USAGE


if __name__ == "__main__":
    raise SystemExit(main())
