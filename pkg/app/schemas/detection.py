from pydantic import BaseModel, ConfigDict

from app.schemas.core import BeamSplitter, DualCoherent



class DetectionPoint(BaseModel):
    """
    차분 강도 검출 동작점.

    두 번째 빔 스플리터는 항상 balanced, 검출기는 이상적이라고 가정한다.

    Attributes:
        bs (BeamSplitter): 입력 빔 스플리터 (BS1)
        source (DualCoherent): 이중 코히런트 입력
        phi (float): 내부 총 위상 φ [rad]
    """
    model_config = ConfigDict(frozen=True)

    bs: BeamSplitter
    source: DualCoherent
    phi: float = 0.0
