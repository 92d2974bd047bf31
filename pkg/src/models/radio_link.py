"""无线链路与路径损耗数据类"""
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, Tuple

from ..exceptions import DomainError


def require_positive(field: str, value: float) -> None:
    """检查参数为有限正数

    Raises:
        DomainError: 非正数或非有限值
    """
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise DomainError(field, value, "必须为数值")
    if not math.isfinite(value):
        raise DomainError(field, value, "必须为有限值")
    if value <= 0:
        raise DomainError(field, value, "必须为正数")


class PathLossModel(Enum):
    """产生损耗值的模型标识"""
    FREE_SPACE = "free-space"
    LOG_DISTANCE = "log-distance"
    OKUMURA = "okumura"
    HATA = "hata"
    LEE = "lee"


class Environment(Enum):
    """Okumura 环境类别"""
    OPEN = "open"
    SUBURBAN = "suburban"
    URBAN = "urban"


@dataclass(frozen=True)
class RadioLink:
    """无线链路场景

    Attributes:
        frequency_mhz: 载波频率 (MHz)
        distance_km: 收发距离 (km)
        bts_height_m: 基站天线高度 (m)
        ms_height_m: 移动台天线高度 (m)
    """
    frequency_mhz: float
    distance_km: float
    bts_height_m: float
    ms_height_m: float

    def __post_init__(self):
        require_positive("frequency_mhz", self.frequency_mhz)
        require_positive("distance_km", self.distance_km)
        require_positive("bts_height_m", self.bts_height_m)
        require_positive("ms_height_m", self.ms_height_m)

    def with_(self, **changes: float) -> "RadioLink":
        """返回修改了部分字段的新链路"""
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, float]:
        return {
            "frequency_mhz": self.frequency_mhz,
            "distance_km": self.distance_km,
            "bts_height_m": self.bts_height_m,
            "ms_height_m": self.ms_height_m,
        }


@dataclass(frozen=True)
class PathLossDb:
    """路径损耗值 (dB)

    Attributes:
        value_db: 损耗 (dB)
        model: 产生该值的模型
        flags: 宽松模式下的标记（越界、钳位等）
    """
    value_db: float
    model: PathLossModel
    flags: Tuple[str, ...] = ()

    def __post_init__(self):
        if not math.isfinite(self.value_db):
            raise DomainError("value_db", self.value_db, f"{self.model.value} 模型结果非有限值")

    @property
    def flagged(self) -> bool:
        return bool(self.flags)


# 路径损耗指数典型值
PATH_LOSS_EXPONENTS: Dict[str, float] = {
    "free_space": 2.0,
    "urban": 3.0,
    "lossy": 4.0,
    "indoor": 5.0,
    "tunnel": 1.8,
}

MACROCELL_REFERENCE_KM = 1.0
MICROCELL_REFERENCE_KM = 0.1


@dataclass(frozen=True)
class LogDistanceParams:
    """对数距离模型参数

    Attributes:
        exponent: 路径损耗指数 n
        reference_distance_km: 近区参考距离 d0 (km)
    """
    exponent: float = 2.0
    reference_distance_km: float = MACROCELL_REFERENCE_KM

    def __post_init__(self):
        require_positive("exponent", self.exponent)
        require_positive("reference_distance_km", self.reference_distance_km)

    @classmethod
    def for_environment(cls, name: str,
                        reference_distance_km: float = MACROCELL_REFERENCE_KM) -> "LogDistanceParams":
        """按环境名取典型路径损耗指数

        Args:
            name: free_space / urban / lossy / indoor / tunnel
            reference_distance_km: 参考距离

        Raises:
            DomainError: 未知环境名
        """
        if name not in PATH_LOSS_EXPONENTS:
            supported = ", ".join(sorted(PATH_LOSS_EXPONENTS))
            raise DomainError("environment", name, f"支持的环境: {supported}")
        return cls(PATH_LOSS_EXPONENTS[name], reference_distance_km)

    @classmethod
    def microcell(cls, exponent: float = 2.0) -> "LogDistanceParams":
        return cls(exponent, MICROCELL_REFERENCE_KM)
