"""按模型名统一计算路径损耗"""
from dataclasses import dataclass, field
from typing import Optional

from ..models.lee_parameters import LeeOverrides, LeeParameters
from ..models.okumura_curves import OkumuraCurves
from ..models.radio_link import Environment, LogDistanceParams, PathLossDb, PathLossModel, RadioLink
from .free_space import default_reference_loss, free_space_loss, log_distance_loss
from .hata import hata_loss
from .lee import lee_loss
from .okumura import okumura_loss


@dataclass(frozen=True)
class ModelContext:
    """模型计算所需的附加参数

    Attributes:
        curves: Okumura 曲线表（仅 okumura 使用）
        env: Okumura 环境类别
        lee_params: Lee 标称参数
        lee_overrides: Lee 场景覆盖值
        log_distance: 对数距离模型参数
        reference_loss_db: 对数距离参考损耗，None 时用 d0 处自由空间损耗
    """
    curves: Optional[OkumuraCurves] = None
    env: Environment = Environment.URBAN
    lee_params: LeeParameters = field(default_factory=LeeParameters)
    lee_overrides: LeeOverrides = field(default_factory=LeeOverrides)
    log_distance: LogDistanceParams = field(default_factory=LogDistanceParams)
    reference_loss_db: Optional[float] = None


def evaluate(model: PathLossModel, link: RadioLink, context: ModelContext,
             permissive: bool = False) -> PathLossDb:
    """计算指定模型在链路上的损耗

    Args:
        model: 模型
        link: 链路
        context: 附加参数
        permissive: 宽松模式（free-space / log-distance / lee 无有效范围限制）

    Returns:
        损耗 (dB)
    """
    if model is PathLossModel.FREE_SPACE:
        return free_space_loss(link)
    if model is PathLossModel.LOG_DISTANCE:
        if context.reference_loss_db is None:
            reference = default_reference_loss(link, context.log_distance)
        else:
            reference = PathLossDb(context.reference_loss_db, PathLossModel.FREE_SPACE)
        return log_distance_loss(link, context.log_distance, reference)
    if model is PathLossModel.OKUMURA:
        if context.curves is None:
            raise ValueError("okumura 模型需要曲线表")
        return okumura_loss(link, context.env, context.curves, permissive)
    if model is PathLossModel.HATA:
        return hata_loss(link, permissive)
    if model is PathLossModel.LEE:
        return lee_loss(context.lee_overrides.scenario(link, context.lee_params), context.lee_params)
    raise ValueError(f"未知模型: {model}")
