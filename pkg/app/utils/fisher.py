import math

from app.core.exceptions import NoInformationError, SingularFisherError
from app.schemas.core import FisherMatrix



def reduce_fisher(m: FisherMatrix) -> float:
    """
    2×2 Fisher 행렬을 차 위상 φ_d 의 Fisher 정보로 축약한다.

    𝓕 = 𝔉_dd - 𝔉_sd·𝔉_ds / 𝔉_ss  (𝓕 ≈ 𝔉_dd 근사는 쓰지 않음)

    Args:
        m (FisherMatrix): 합/차 위상 Fisher 행렬

    Returns:
        float: 축약된 Fisher 정보 𝓕

    Raises:
        SingularFisherError: 𝔉_ss = 0 (총 광자수 0)
    """
    if m.ss <= 0.0:
        raise SingularFisherError()
    return m.dd - m.sd * m.ds / m.ss


def qcrb_sensitivity(fisher: float) -> float:
    """양자 Cramér-Rao 하한 Δφ_d = 1/√𝓕."""
    if not fisher > 0.0:
        raise NoInformationError()
    return 1.0 / math.sqrt(fisher)
