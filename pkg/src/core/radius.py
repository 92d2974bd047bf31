"""链路预算反演：最大覆盖半径"""
import logging
from dataclasses import dataclass
from typing import Tuple

from scipy.optimize import bisect

from ..exceptions import DomainError, NoCoverageError
from ..models.radio_link import PathLossDb, PathLossModel, RadioLink
from .evaluator import ModelContext, evaluate
from .hata import SCOPE as HATA_SCOPE
from .okumura import DISTANCE_WINDOW as OKUMURA_DISTANCE_WINDOW

logger = logging.getLogger(__name__)

# 二分法距离分辨率 1 m
RESOLUTION_KM = 0.001

LEE_DISTANCE_WINDOW_KM = (1.0, 100.0)

SATURATED_FLAG = "radius:saturated"


@dataclass(frozen=True)
class RadiusResult:
    """覆盖半径

    Attributes:
        model: 模型
        distance_km: 满足预算的最大距离
        loss_db: 该距离处的损耗
        saturated: 整个有效距离范围都在预算内
        flags: 标记
    """
    model: PathLossModel
    distance_km: float
    loss_db: float
    saturated: bool = False
    flags: Tuple[str, ...] = ()


def max_allowable_loss(tx_power_dbm: float, rx_sensitivity_dbm: float,
                       tx_gain_db: float = 0.0, rx_gain_db: float = 0.0,
                       misc_loss_db: float = 0.0) -> float:
    """链路预算允许的最大路径损耗

    L_max = P_t + G_t + G_r - L_misc - P_sens
    """
    return tx_power_dbm + tx_gain_db + rx_gain_db - misc_loss_db - rx_sensitivity_dbm


def distance_window(model: PathLossModel, context: ModelContext) -> Tuple[float, float]:
    """模型用于反演的距离范围 (km)"""
    if model is PathLossModel.OKUMURA:
        lo, hi = OKUMURA_DISTANCE_WINDOW.lo, OKUMURA_DISTANCE_WINDOW.hi
        if context.curves is not None:
            lo = max(lo, context.curves.distances_km[0])
            hi = min(hi, context.curves.distances_km[-1])
        return lo, hi
    if model is PathLossModel.HATA:
        return HATA_SCOPE.distance.lo, HATA_SCOPE.planning_max_distance_km
    if model is PathLossModel.LEE:
        return LEE_DISTANCE_WINDOW_KM
    raise DomainError("model", model.value, "覆盖半径仅支持 okumura / hata / lee")


def max_radius(model: PathLossModel, link_template: RadioLink, max_loss_db: float,
               context: ModelContext, permissive: bool = False) -> RadiusResult:
    """求损耗不超过预算的最大距离

    损耗随距离严格递增，在模型有效距离范围内二分，分辨率 1 m。

    Args:
        model: 模型
        link_template: 固定频率与天线高度的链路（距离字段被忽略）
        max_loss_db: 最大允许损耗 (dB)
        context: 模型附加参数
        permissive: 宽松模式

    Returns:
        覆盖半径；整个范围都在预算内时返回上界并标记 saturated

    Raises:
        NoCoverageError: 最小距离处损耗已超过预算
    """
    lo, hi = distance_window(model, context)

    def loss_at(distance_km: float) -> PathLossDb:
        return evaluate(model, link_template.with_(distance_km=distance_km), context, permissive)

    at_lo = loss_at(lo)
    if at_lo.value_db > max_loss_db:
        raise NoCoverageError(model.value, lo, at_lo.value_db, max_loss_db)
    if at_lo.value_db == max_loss_db:
        return RadiusResult(model, lo, at_lo.value_db, flags=at_lo.flags)

    at_hi = loss_at(hi)
    if at_hi.value_db <= max_loss_db:
        logger.info(f"{model.value}: 预算 {max_loss_db:.2f} dB 覆盖整个距离范围，半径取上限 {hi:g} km")
        return RadiusResult(model, hi, at_hi.value_db, saturated=True,
                            flags=at_hi.flags + (SATURATED_FLAG,))

    root = bisect(lambda d: loss_at(d).value_db - max_loss_db, lo, hi, xtol=RESOLUTION_KM)
    final = loss_at(root)
    while root > lo and final.value_db > max_loss_db:
        root = max(lo, root - RESOLUTION_KM)
        final = loss_at(root)
    return RadiusResult(model, root, final.value_db, flags=final.flags)
