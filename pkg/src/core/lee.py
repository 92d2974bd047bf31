"""Lee 模型

L = 124 + 30.5·log10(d / d0) + 10·k·log10(f / fc) - α0
α0 = 10·log10(α1·α2·α3·α4·α5)

频率修正同时出现在 10·k·log10(f / fc) 项和 α5 中，f ≠ fc 时两者叠加，不做合并。
结果按路径损耗 (dB) 报告。
"""
import logging
import math
from typing import List, NamedTuple, Optional

from ..models.lee_parameters import Alpha4Mode, LeeParameters, LeeScenario
from ..models.radio_link import Environment, PathLossDb, PathLossModel

logger = logging.getLogger(__name__)

K_SWITCH_FREQUENCY_MHZ = 450.0
NOMINAL_GAIN_FACTOR = 4.0


class AlphaFactors(NamedTuple):
    """α1..α5（无量纲）"""
    alpha1: float
    alpha2: float
    alpha3: float
    alpha4: float
    alpha5: float

    @property
    def alpha0_db(self) -> float:
        return 10.0 * math.log10(self.alpha1 * self.alpha2 * self.alpha3 * self.alpha4 * self.alpha5)


def select_k(frequency_mhz: float, environment: Environment) -> int:
    """按频率与环境选择 k

    f < 450 MHz 且郊区/开阔地: k = 2；f > 450 MHz 且城区: k = 3。
    其余组合按频率决定，f = 450 MHz 取 3。
    """
    low_frequency = frequency_mhz < K_SWITCH_FREQUENCY_MHZ
    urban = environment is Environment.URBAN
    if low_frequency and not urban:
        return 2
    if not low_frequency and urban:
        return 3
    k = 2 if low_frequency else 3
    logger.info(f"频率 {frequency_mhz:g} MHz 与环境 {environment.value} 不符合 k 的标准组合，按频率取 k={k}")
    return k


def alpha_factors(scenario: LeeScenario, params: LeeParameters,
                  flags: Optional[List[str]] = None) -> AlphaFactors:
    """计算修正因子 α1..α5

    Args:
        scenario: 实际工作条件
        params: 标称参数
        flags: 标记收集列表

    Returns:
        (α1, α2, α3, α4, α5)
    """
    link = scenario.link
    alpha1 = (link.bts_height_m / params.nominal_bts_height_m) ** 2

    # h_m = 3 m 时两分支都等于 1，取 v = 1
    v = 1 if link.ms_height_m <= params.nominal_ms_height_m else 2
    alpha2 = (link.ms_height_m / params.nominal_ms_height_m) ** v

    alpha3 = (scenario.tx_power_w / params.nominal_tx_power_w) ** 2

    if params.alpha4_mode is Alpha4Mode.NOMINAL_EXACT:
        gain_linear = NOMINAL_GAIN_FACTOR * 10.0 ** ((scenario.bts_gain_db - params.nominal_bts_gain_db) / 10.0)
    else:
        gain_linear = 10.0 ** (scenario.bts_gain_db / 10.0)
    alpha4 = gain_linear / NOMINAL_GAIN_FACTOR

    frequency_ratio = link.frequency_mhz / params.nominal_frequency_mhz
    alpha5 = frequency_ratio ** (-params.alpha5_exponent)
    if frequency_ratio != 1.0 and params.alpha5_at_endpoint and flags is not None:
        flags.append(f"lee.alpha5_exponent:endpoint-{params.alpha5_exponent:g}")

    return AlphaFactors(alpha1, alpha2, alpha3, alpha4, alpha5)


def lee_loss(scenario: LeeScenario, params: Optional[LeeParameters] = None) -> PathLossDb:
    """Lee 路径损耗

    Args:
        scenario: 实际工作条件
        params: 标称参数，默认 LeeParameters()

    Returns:
        损耗 (dB)
    """
    params = params or LeeParameters()
    link = scenario.link
    flags: List[str] = []
    factors = alpha_factors(scenario, params, flags)
    k = scenario.k(params)
    value = (params.intercept_db
             + params.slope_db_per_decade * math.log10(link.distance_km / params.nominal_distance_km)
             + 10.0 * k * math.log10(link.frequency_mhz / params.nominal_frequency_mhz)
             - factors.alpha0_db)
    return PathLossDb(value, PathLossModel.LEE, tuple(flags))
