"""Okumura 模型

L50 = L_F + A_mu(f, d) - G(h_te) - G(h_re) - G_AREA
"""
import math
from typing import List, Optional, Tuple

import numpy as np

from ..models.okumura_curves import OkumuraCurves
from ..models.radio_link import Environment, PathLossDb, PathLossModel, RadioLink, require_positive
from .free_space import free_space_loss
from .validity import Window, enforce_range

MODEL = PathLossModel.OKUMURA.value

FREQUENCY_WINDOW = Window(150.0, 1920.0, "MHz")
DISTANCE_WINDOW = Window(1.0, 100.0, "km")
BTS_HEIGHT_WINDOW = Window(30.0, 100.0, "m", lo_open=True)
BTS_HEIGHT_EXTENDED_WINDOW = Window(0.0, 1000.0, "m", lo_open=True)
MS_HEIGHT_WINDOW = Window(0.0, 10.0, "m", lo_open=True, hi_open=True)

# 高度增益的参考高度
REFERENCE_BTS_HEIGHT_M = 200.0
REFERENCE_MS_HEIGHT_M = 3.0


def _bracket(grid: np.ndarray, x: float) -> Tuple[int, float]:
    """返回 x 所在区间的下标及其在 log10 坐标中的权重

    网格节点上权重恰为 0 或 1，保证节点处插值精确。
    """
    idx = int(np.searchsorted(grid, x, side="right")) - 1
    idx = min(max(idx, 0), len(grid) - 2)
    lo, hi = float(grid[idx]), float(grid[idx + 1])
    weight = (math.log10(x) - math.log10(lo)) / (math.log10(hi) - math.log10(lo))
    return idx, weight


def _clamp_to_table(curves: OkumuraCurves, frequency_mhz: float, distance_km: float,
                    permissive: bool, flags: Optional[List[str]]) -> Tuple[float, float]:
    """将查询点钳位到曲线表（和有效范围）之内"""
    f_window = Window(max(FREQUENCY_WINDOW.lo, curves.frequencies_mhz[0]),
                      min(FREQUENCY_WINDOW.hi, curves.frequencies_mhz[-1]), "MHz")
    d_window = Window(max(DISTANCE_WINDOW.lo, curves.distances_km[0]),
                      min(DISTANCE_WINDOW.hi, curves.distances_km[-1]), "km")
    f_ok = enforce_range(MODEL, "frequency_mhz", frequency_mhz, f_window,
                         permissive, flags, marker="clamped")
    d_ok = enforce_range(MODEL, "distance_km", distance_km, d_window,
                         permissive, flags, marker="clamped")
    return (frequency_mhz if f_ok else f_window.clamp(frequency_mhz),
            distance_km if d_ok else d_window.clamp(distance_km))


def amu(curves: OkumuraCurves, frequency_mhz: float, distance_km: float,
        permissive: bool = False, flags: Optional[List[str]] = None) -> float:
    """查询中值衰减 A_mu(f, d)

    在 (log10 f, log10 d) 上做双线性插值，网格节点处返回存储值。

    Args:
        curves: 曲线表
        frequency_mhz: 频率，有效范围 150-1920 MHz
        distance_km: 距离，有效范围 1-100 km
        permissive: 宽松模式下越界点钳位到边缘并标记
        flags: 标记收集列表

    Returns:
        A_mu (dB)

    Raises:
        ValidityRangeError: 严格模式下越界
    """
    f, d = _clamp_to_table(curves, frequency_mhz, distance_km, permissive, flags)
    i, wf = _bracket(curves.frequency_grid, f)
    j, wd = _bracket(curves.distance_grid, d)
    table = curves.amu_matrix
    low_f = (1.0 - wd) * table[i, j] + wd * table[i, j + 1]
    high_f = (1.0 - wd) * table[i + 1, j] + wd * table[i + 1, j + 1]
    return float((1.0 - wf) * low_f + wf * high_f)


def bts_height_gain(bts_height_m: float, permissive: bool = False,
                    flags: Optional[List[str]] = None) -> float:
    """基站天线高度增益 G(h_te) = 20·log10(h_te / 200)

    严格模式要求 30 < h_te <= 100 m，100 m 处 G = -6.02 dB；宽松模式允许到 1000 m 并标记。
    """
    require_positive("bts_height_m", bts_height_m)
    enforce_range(MODEL, "bts_height_m", bts_height_m, BTS_HEIGHT_WINDOW, permissive, flags)
    if permissive:
        # 宽松模式仍不超过 1000 m
        enforce_range(MODEL, "bts_height_m", bts_height_m, BTS_HEIGHT_EXTENDED_WINDOW, False, flags)
    return 20.0 * math.log10(bts_height_m / REFERENCE_BTS_HEIGHT_M)


def ms_height_gain(ms_height_m: float, permissive: bool = False,
                   flags: Optional[List[str]] = None) -> float:
    """移动台天线高度增益

    h_re <= 3 m: 10·log10(h_re / 3)
    3 < h_re < 10 m: 20·log10(h_re / 3)
    """
    require_positive("ms_height_m", ms_height_m)
    enforce_range(MODEL, "ms_height_m", ms_height_m, MS_HEIGHT_WINDOW, permissive, flags)
    ratio = ms_height_m / REFERENCE_MS_HEIGHT_M
    if ms_height_m <= REFERENCE_MS_HEIGHT_M:
        return 10.0 * math.log10(ratio)
    return 20.0 * math.log10(ratio)


def okumura_loss(link: RadioLink, env: Environment, curves: OkumuraCurves,
                 permissive: bool = False) -> PathLossDb:
    """Okumura 中值路径损耗

    Args:
        link: 链路
        env: 环境类别
        curves: 曲线表
        permissive: 宽松模式

    Returns:
        损耗 (dB)

    Raises:
        ValidityRangeError: 严格模式下任一分量越界
    """
    flags: List[str] = []
    attenuation = amu(curves, link.frequency_mhz, link.distance_km, permissive, flags)
    g_te = bts_height_gain(link.bts_height_m, permissive, flags)
    g_re = ms_height_gain(link.ms_height_m, permissive, flags)
    value = free_space_loss(link).value_db + attenuation - g_te - g_re - curves.garea(env)
    return PathLossDb(value, PathLossModel.OKUMURA, tuple(flags))
