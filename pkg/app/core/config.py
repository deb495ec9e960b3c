import os

from pathlib import Path
from typing import Dict

from app.core.exceptions import UsageError


def read_threads() -> int:
    """
    워커 풀 상한 (sweep 행, verify 추첨 병렬 처리). 실행 시점에 읽는다.

    Raises:
        UsageError: QFI_MZI_THREADS 가 정수가 아닐 때
    """
    raw = os.environ.get("QFI_MZI_THREADS")
    if raw is None:
        return max(1, os.cpu_count() or 1)
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"QFI_MZI_THREADS must be an integer, got {raw!r}")


# 루트 로거 레벨
LOG_LEVEL = os.environ.get("QFI_MZI_LOG_LEVEL", "WARNING").upper()


def load_config_file(path: str | Path) -> Dict[str, str]:
    """
    key=value 형식의 설정 파일을 읽어 dict로 반환한다.

    - '#' 이후는 주석, 빈 줄은 무시
    - 키의 '-'는 '_'로 정규화 (argparse dest 이름과 맞춤)
    - 값은 문자열 그대로 둔다 (argparse가 type 변환을 수행)

    Args:
        path: 설정 파일 경로

    Returns:
        Dict[str, str]: 정규화된 키 → 원문 값

    Raises:
        UsageError: 파일이 없거나 '=' 없는 줄이 있을 때
    """
    path = Path(path)
    if not path.is_file():
        raise UsageError(f"config file not found: {path}")

    values: Dict[str, str] = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, value = line.split("=", 1)
        values[key.strip().replace("-", "_")] = value.strip()
    return values
