"""Hata 模型（大城市）

L50 = 69.55 + 26.16·log10 f - 13.82·log10 h_te - a(h_re) + (44.9 - 6.55·log10 h_te)·log10 d
"""
import math
from dataclasses import dataclass
from typing import List, Optional

from ..models.radio_link import PathLossDb, PathLossModel, RadioLink, require_positive
from .validity import Window, enforce_range

MODEL = PathLossModel.HATA.value

# f = 300 MHz 时两个分支条件同时成立，取 f >= 300 分支
BRANCH_FREQUENCY_MHZ = 300.0


@dataclass(frozen=True)
class HataScope:
    """Hata 模型适用范围（仅大城市）

    Attributes:
        city_size: 城市规模
        frequency: 频率范围
        bts_height: 基站天线高度范围
        ms_height: 移动台天线高度范围
        distance: 距离下限（上界开放）
        planning_max_distance_km: 覆盖半径反演时的距离上限
    """
    city_size: str = "large"
    frequency: Window = Window(150.0, 1500.0, "MHz")
    bts_height: Window = Window(30.0, 200.0, "m")
    ms_height: Window = Window(1.0, 10.0, "m")
    distance: Window = Window(1.0, math.inf, "km")
    planning_max_distance_km: float = 20.0


SCOPE = HataScope()


def mobile_correction(ms_height_m: float, frequency_mhz: float,
                      permissive: bool = False, flags: Optional[List[str]] = None) -> float:
    """移动台天线高度修正因子 a(h_re)（大城市）

    f < 300 MHz: 8.29·(log10 1.54·h_re)² - 1.1
    f >= 300 MHz: 3.2·(log10 11.75·h_re)² - 4.97

    两个分支在 300 MHz 处不连续。

    Args:
        ms_height_m: 移动台天线高度 (m)，1-10
        frequency_mhz: 频率 (MHz)，150-1500
        permissive: 宽松模式
        flags: 标记收集列表

    Returns:
        a(h_re) (dB)
    """
    require_positive("ms_height_m", ms_height_m)
    require_positive("frequency_mhz", frequency_mhz)
    enforce_range(MODEL, "ms_height_m", ms_height_m, SCOPE.ms_height, permissive, flags)
    enforce_range(MODEL, "frequency_mhz", frequency_mhz, SCOPE.frequency, permissive, flags)
    if frequency_mhz >= BRANCH_FREQUENCY_MHZ:
        return 3.2 * math.log10(11.75 * ms_height_m) ** 2 - 4.97
    return 8.29 * math.log10(1.54 * ms_height_m) ** 2 - 1.1


def distance_slope(bts_height_m: float) -> float:
    """每十倍距离的损耗增量 (dB/decade)"""
    return 44.9 - 6.55 * math.log10(bts_height_m)


def hata_loss(link: RadioLink, permissive: bool = False) -> PathLossDb:
    """Hata 城市中值路径损耗

    Args:
        link: 链路
        permissive: 宽松模式下越界参数照常计算并标记

    Returns:
        损耗 (dB)

    Raises:
        ValidityRangeError: 严格模式下参数越界
    """
    flags: List[str] = []
    enforce_range(MODEL, "bts_height_m", link.bts_height_m, SCOPE.bts_height, permissive, flags)
    enforce_range(MODEL, "distance_km", link.distance_km, SCOPE.distance, permissive, flags)
    correction = mobile_correction(link.ms_height_m, link.frequency_mhz, permissive, flags)
    value = (69.55
             + 26.16 * math.log10(link.frequency_mhz)
             - 13.82 * math.log10(link.bts_height_m)
             - correction
             + distance_slope(link.bts_height_m) * math.log10(link.distance_km))
    return PathLossDb(value, PathLossModel.HATA, tuple(flags))
