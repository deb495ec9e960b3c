import math
import argparse

from typing import Dict, List, Optional, Sequence

from app.core.config import load_config_file
from app.core.exceptions import UsageError
from app.schemas.core import InputScenario
from app.schemas.sweep import OverlayOverride
from app.utils.scenario import build_scenario



# -----------------------------------------------------
# Base
# - 모든 서브커맨드가 공유하는 파서, 인자, 설정 파일 처리
# -----------------------------------------------------
SCENARIO_CHOICES = ("dual_coherent", "coh_sqz", "sqzcoh_sqz")

# --degrees 일 때 라디안으로 바꾸는 dest / overlay 키
ANGLE_DESTS = ("alpha_phase", "beta_phase", "theta", "phi", "delta_theta", "phi_internal")
# 설정 파일에서 bool 로 해석할 값
_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


class CliParser(argparse.ArgumentParser):
    """사용법 오류를 SystemExit 대신 UsageError 로 올리는 파서."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def common_parent() -> argparse.ArgumentParser:
    """--config, --degrees, -v (각 서브커맨드에 parents 로 붙임)"""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", default=None, help="key=value 설정 파일 (명시한 플래그가 우선)")
    parent.add_argument("--degrees", action="store_true", help="각도 입력을 도 단위로 해석")
    parent.add_argument("-v", "--verbose", action="count", default=0, help="-v: INFO, -vv: DEBUG")
    return parent


def add_scenario_arguments(parser: argparse.ArgumentParser) -> None:
    """
    입력 시나리오 플래그.

    - 이중 코히런트: --alpha --alpha-phase --beta --beta-phase
    - 스퀴징 시나리오: --alpha --alpha-phase --r --theta (--z --phi)
    - --delta-theta 를 주면 θ_β 또는 θ 대신 불일치로 지정
    """
    group = parser.add_argument_group("scenario")
    # 설정 파일로도 줄 수 있으므로 argparse 의 required 대신 scenario_from_args 에서 확인
    group.add_argument("--scenario", choices=SCENARIO_CHOICES, default=None)
    group.add_argument("--alpha", type=float, default=1.0, help="|α|")
    group.add_argument("--alpha-phase", type=float, default=0.0, help="θ_α [rad]")
    group.add_argument("--beta", type=float, default=0.0, help="|β| (dual_coherent)")
    group.add_argument("--beta-phase", type=float, default=0.0, help="θ_β [rad] (dual_coherent)")
    group.add_argument("--r", type=float, default=0.0, help="포트 0 스퀴징 인자")
    group.add_argument("--theta", type=float, default=0.0, help="포트 0 스퀴징 각 θ [rad]")
    group.add_argument("--z", type=float, default=0.0, help="포트 1 스퀴징 인자 (sqzcoh_sqz)")
    group.add_argument("--phi", type=float, default=0.0, help="포트 1 스퀴징 각 φ [rad] (sqzcoh_sqz)")
    group.add_argument("--delta-theta", type=float, default=None, help="입력 위상 불일치 Δθ [rad]")


def require(args: argparse.Namespace, *dests: str) -> None:
    """플래그나 설정 파일 어느 쪽에서든 값이 들어왔는지 확인."""
    for dest in dests:
        if getattr(args, dest, None) is None:
            raise UsageError(f"{args.command}: --{dest.replace('_', '-')} is required")


def scenario_from_args(args: argparse.Namespace) -> InputScenario:
    require(args, "scenario")
    params = {
        key: getattr(args, key)
        for key in ("alpha", "alpha_phase", "beta", "beta_phase", "r", "theta", "z", "phi")
    }
    if args.delta_theta is not None:
        params["delta_theta"] = args.delta_theta
    return build_scenario(args.scenario, params)


def parse_overlay(text: str) -> OverlayOverride:
    """
    'label=T=0.3,t_squared=0.09' 형식의 overlay 한 개.

    label, kind 외의 키는 실수 값이다. label 값에는 '=' 가 들어가도 된다.
    """
    label = None
    kind = None
    values: Dict[str, float] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        if "=" not in item:
            raise UsageError(f"overlay item must be key=value, got {item!r}")
        key, value = item.split("=", 1)
        key = key.strip().replace("-", "_")
        if key == "label":
            label = value
        elif key == "kind":
            if value not in SCENARIO_CHOICES:
                raise UsageError(f"overlay kind must be one of {SCENARIO_CHOICES}, got {value!r}")
            kind = value
        else:
            try:
                values[key] = float(value)
            except ValueError:
                raise UsageError(f"overlay value for {key!r} must be a number, got {value!r}")
    return OverlayOverride(label=label or text, values=values, kind=kind)


def to_radians(args: argparse.Namespace, overlays: Optional[List[OverlayOverride]] = None) -> List[OverlayOverride]:
    """
    --degrees 일 때 각도 플래그와 overlay 의 각도 값을 라디안으로 바꾼다 (입력에만 적용).
    """
    overlays = list(overlays or [])
    if not args.degrees:
        return overlays
    for dest in ANGLE_DESTS:
        value = getattr(args, dest, None)
        if value is not None:
            setattr(args, dest, math.radians(value))
    return [
        overlay.model_copy(update={
            "values": {
                key: math.radians(value) if key in ANGLE_DESTS else value
                for key, value in overlay.values.items()
            }
        })
        for overlay in overlays
    ]


def _coerce(key: str, raw: str, current) -> object:
    if isinstance(current, bool):
        lowered = raw.lower()
        if lowered in _TRUE:
            return True
        if lowered in _FALSE:
            return False
        raise UsageError(f"config key {key!r} expects a boolean, got {raw!r}")
    if isinstance(current, list) or key == "overlay":
        raise UsageError(f"config key {key!r} cannot be set from a config file")
    return raw


def parse_with_config(
        parser: argparse.ArgumentParser,
        commands: Dict[str, argparse.ArgumentParser],
        argv: Optional[Sequence[str]]
    ) -> argparse.Namespace:
    """
    1차 파싱 후 --config 가 있으면 파일 값을 서브커맨드 기본값으로 넣고 다시 파싱한다.
    명시한 플래그는 기본값을 덮으므로 항상 파일보다 우선한다.

    Raises:
        UsageError: 파일에 서브커맨드가 모르는 키가 있을 때 (키 이름 포함)
    """
    args = parser.parse_args(argv)
    if not getattr(args, "config", None):
        return args

    known = vars(args)
    defaults = {}
    for key, raw in load_config_file(args.config).items():
        if key in ("config", "command", "handler") or key not in known:
            raise UsageError(f"unknown config key {key!r} for '{args.command}'")
        defaults[key] = _coerce(key, raw, known[key])

    commands[args.command].set_defaults(**defaults)
    return parser.parse_args(argv)
