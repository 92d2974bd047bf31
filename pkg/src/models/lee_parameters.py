"""Lee 模型参数数据类"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..exceptions import DomainError
from .radio_link import RadioLink, require_positive


class Alpha4Mode(Enum):
    """α4 计算方式

    NOMINAL_EXACT: 标称增益视为恰好 4 倍（名义条件下 L = 124 dB）
    LITERAL: 按 10^(G_b/10) / 4 计算
    """
    NOMINAL_EXACT = "nominal-exact"
    LITERAL = "literal"


@dataclass(frozen=True)
class LeeParameters:
    """Lee 模型标称（校准）参数

    Attributes:
        nominal_distance_km: 标称距离 d0
        nominal_bts_height_m: 标称基站天线高度 h_b
        nominal_ms_height_m: 标称移动台天线高度 h_m
        nominal_tx_power_w: 标称发射功率 P_b
        nominal_bts_gain_db: 标称基站天线增益 G_b
        nominal_ms_gain_db: 移动台天线增益 G_m（无对应 α 因子，仅作记录）
        nominal_frequency_mhz: 标称频率 f_c
        slope_db_per_decade: 距离斜率
        intercept_db: 截距 (d = d0 时的损耗)
        k_exponent: 频率项系数 k，取 2 或 3
        alpha5_exponent: α5 指数 n，2 <= n <= 3
        alpha4_mode: α4 计算方式
    """
    nominal_distance_km: float = 1.6
    nominal_bts_height_m: float = 30.48
    nominal_ms_height_m: float = 3.0
    nominal_tx_power_w: float = 10.0
    nominal_bts_gain_db: float = 6.0
    nominal_ms_gain_db: float = 0.0
    nominal_frequency_mhz: float = 900.0
    slope_db_per_decade: float = 30.5
    intercept_db: float = 124.0
    k_exponent: int = 3
    alpha5_exponent: float = 2.0
    alpha4_mode: Alpha4Mode = Alpha4Mode.NOMINAL_EXACT

    def __post_init__(self):
        for name in ("nominal_distance_km", "nominal_bts_height_m", "nominal_ms_height_m",
                     "nominal_tx_power_w", "nominal_frequency_mhz",
                     "slope_db_per_decade", "intercept_db"):
            require_positive(name, getattr(self, name))
        validate_k(self.k_exponent)
        if not 2.0 <= self.alpha5_exponent <= 3.0:
            raise DomainError("alpha5_exponent", self.alpha5_exponent, "n 必须位于 [2, 3]")

    @property
    def alpha5_at_endpoint(self) -> bool:
        """n 取开区间 (2, 3) 的端点"""
        return self.alpha5_exponent in (2.0, 3.0)


def validate_k(k: int) -> None:
    if k not in (2, 3):
        raise DomainError("k_exponent", k, "k 只能为 2 或 3")


@dataclass(frozen=True)
class LeeScenario:
    """Lee 模型的实际工作条件

    Attributes:
        link: 链路
        tx_power_w: 实际发射功率 (W)
        bts_gain_db: 实际基站天线增益 (dB)
        environment_k: 覆盖 LeeParameters.k_exponent 的 k 值
    """
    link: RadioLink
    tx_power_w: float = 10.0
    bts_gain_db: float = 6.0
    environment_k: Optional[int] = None

    def __post_init__(self):
        require_positive("tx_power_w", self.tx_power_w)
        if self.environment_k is not None:
            validate_k(self.environment_k)

    @classmethod
    def nominal(cls, link: RadioLink, params: Optional[LeeParameters] = None) -> "LeeScenario":
        """以标称功率和增益创建场景"""
        params = params or LeeParameters()
        return cls(link=link, tx_power_w=params.nominal_tx_power_w,
                   bts_gain_db=params.nominal_bts_gain_db)

    def k(self, params: LeeParameters) -> int:
        return self.environment_k if self.environment_k is not None else params.k_exponent


@dataclass(frozen=True)
class LeeOverrides:
    """扫描/命令行中对 Lee 场景的覆盖值，None 表示使用标称值"""
    tx_power_w: Optional[float] = None
    bts_gain_db: Optional[float] = None
    environment_k: Optional[int] = None

    def scenario(self, link: RadioLink, params: LeeParameters) -> LeeScenario:
        return LeeScenario(
            link=link,
            tx_power_w=params.nominal_tx_power_w if self.tx_power_w is None else self.tx_power_w,
            bts_gain_db=params.nominal_bts_gain_db if self.bts_gain_db is None else self.bts_gain_db,
            environment_k=self.environment_k,
        )
