import argparse

from concurrent.futures import Executor



def get_pool(args: argparse.Namespace) -> Executor:
    """
    main.py 가 Namespace 에 실어 둔 전역 워커 풀을 꺼내는 헬퍼.

    - 프로세스 시작 시 ThreadPoolExecutor 를 한 번만 만들고 (QFI_MZI_THREADS 상한)
    - 각 서브커맨드 핸들러가 같은 풀을 공유한다.

    Args:
        args (argparse.Namespace): 파싱된 인자 (pool 속성 포함)

    Returns:
        Executor: 공유 워커 풀
    """
    return args.pool
