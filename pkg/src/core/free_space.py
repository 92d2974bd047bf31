"""自由空间与对数距离路径损耗"""
import math

from ..exceptions import DomainError
from ..models.radio_link import LogDistanceParams, PathLossDb, PathLossModel, RadioLink

SPEED_OF_LIGHT_M_S = 2.99792458e8
_FOUR_PI = 4.0 * math.pi


def wavelength_m(frequency_mhz: float) -> float:
    """波长 λ = c / f (m)"""
    return SPEED_OF_LIGHT_M_S / (frequency_mhz * 1e6)


def free_space_loss(link: RadioLink) -> PathLossDb:
    """自由空间路径损耗 20·log10(4π·d / λ)

    Args:
        link: 链路（仅使用频率和距离）

    Returns:
        损耗 (dB)
    """
    distance_m = link.distance_km * 1000.0
    value = 20.0 * math.log10(_FOUR_PI * distance_m / wavelength_m(link.frequency_mhz))
    return PathLossDb(value, PathLossModel.FREE_SPACE)


def default_reference_loss(link: RadioLink, params: LogDistanceParams) -> PathLossDb:
    """以参考距离 d0 处的自由空间损耗作为对数距离模型的参考损耗"""
    return free_space_loss(link.with_(distance_km=params.reference_distance_km))


def log_distance_loss(link: RadioLink, params: LogDistanceParams,
                      reference_loss_db: PathLossDb) -> PathLossDb:
    """对数距离路径损耗 L(d0) + 10·n·log10(d / d0)

    Args:
        link: 链路
        params: 路径损耗指数与参考距离
        reference_loss_db: d0 处的参考损耗

    Returns:
        损耗 (dB)

    Raises:
        DomainError: d < d0（公式仅对 d >= d0 成立）
    """
    d0 = params.reference_distance_km
    if link.distance_km < d0:
        raise DomainError("distance_km", link.distance_km,
                          f"对数距离模型要求 d >= d0 = {d0:g} km")
    value = reference_loss_db.value_db + 10.0 * params.exponent * math.log10(link.distance_km / d0)
    return PathLossDb(value, PathLossModel.LOG_DISTANCE, reference_loss_db.flags)
